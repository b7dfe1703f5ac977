import os

from setuptools import find_packages, setup

__this_dir = os.path.dirname(os.path.realpath(__file__))


def _requirements():
    with open(os.path.join(__this_dir, 'requirements.txt'), 'r', encoding='utf-8') as stream:
        return [line.strip() for line in stream if line.strip() and not line.startswith('#')]


def _version():
    with open(os.path.join(__this_dir, 'cli', 'reeslab', '__init__.py'), 'r', encoding='utf-8') as stream:
        for line in stream:
            if line.startswith('VERSION'):
                return line.split('=')[1].strip().strip('\'"')
    raise RuntimeError('VERSION not found')


setup(
    name='reeslab',
    version=_version(),
    description='Rees algebras of modules, generic Bourbaki ideals and Cohen-Macaulayness criteria',
    packages=find_packages(include=['cli', 'cli.*']),
    python_requires='>=3.7',
    install_requires=_requirements(),
    entry_points={
        'console_scripts': ['reeslab = cli.__main__:main'],
    },
)
