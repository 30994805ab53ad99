#!/usr/bin/env python3

# Update dependencies:
#
#  - python3 -m venv venv
#  - venv/bin/python -m pip list --outdated
#  - update requirements.txt and environment.yml
#
# Prepare a release:
#
#  - git pull --rebase
#  - Remove untracked files/dirs: git clean -fdx
#  - maybe update VERSION below
#  - run tests: tox
#  - git commit -a -m "prepare release x.y"
#  - git push
#
# Release a new version:
#
#  - git tag VERSION
#  - git push --tags
#  - python3 setup.py sdist bdist_wheel
#  - twine upload dist/*

from setuptools import setup, find_packages

VERSION = '0.1.0'

DESCRIPTION = 'Exact checks for log del Pezzo surfaces of index at most two'

CLASSIFIERS = [
    'Development Status :: 4 - Beta',
    'Intended Audience :: Science/Research',
    'License :: OSI Approved :: MIT License',
    'Natural Language :: English',
    'Operating System :: OS Independent',
    'Environment :: Console',
    'Programming Language :: Python',
    'Programming Language :: Python :: 3.6',
    'Programming Language :: Python :: 3.7',
    'Topic :: Scientific/Engineering :: Mathematics',
]

with open('README.rst', 'r') as f:
    long_description = f.read()

setup(
    name='logdp',
    version=VERSION,
    description=DESCRIPTION,
    long_description=long_description,
    license='MIT',
    packages=find_packages(exclude=['tests']),
    include_package_data=True,
    package_data={
        'logdp': ['config/logdp.conf.default', 'fixtures/*.json', 'diagrams/*.json']
    },
    classifiers=CLASSIFIERS,
    install_requires=[
        'numpy',
        'pandas',
        'dask',
        'distributed',
        'toolz',
        'networkx',
        'sympy',
    ],
    entry_points={
        'console_scripts': [
            'logdp = logdp:main'
        ]
    }
)
