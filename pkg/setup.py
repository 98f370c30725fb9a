#! /usr/bin/env python

'''Setup file for zeckendorf

See:
    https://packaging.python.org/en/latest/distributing.html
'''

import re
from setuptools import setup, find_packages
from os import listdir
from os.path import join, dirname


def read(*paths):
    '''read and return txt content of file'''
    with open(join(dirname(__file__), *paths)) as fp:
        return fp.read()


def discover_checks():
    checks = filter(lambda check: check not in [
        '__init__.py',
        'check.py',
        'README.md',
        'libs',
        'tests',
        '__pycache__',
    ], listdir(join(dirname(__file__), 'src', 'zeckendorf', 'verify')))
    checks = [check.replace('.py', '') for check in checks]
    return ['{source} = zeckendorf.verify.{source}:{source_title}'
        .format(source=source, source_title=source.title()) \
            for source in sorted(checks)]

def find_version(*paths):
    '''reads a file and returns the defined __version__ value'''
    version_match = re.search(r"^__version__ ?= ?['\"]([^'\"]*)['\"]",
                              read(*paths), re.M)
    if version_match:
        return version_match.group(1)
    raise RuntimeError("Unable to find version string.")


# launch setup
setup(
    name = 'zeckendorf',
    version = find_version('src', 'zeckendorf', '__init__.py'),

    # descriptions
    description = 'Zeckendorf partitions and the change in their number of '
                  'summands between consecutive integers.',
    long_description = read('README.md'),
    long_description_content_type="text/markdown",

    # project licensing
    license = 'Apache 2.0',

    classifiers = [
        'Development Status :: 4 - Beta',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'Intended Audience :: Education',
        'License :: OSI Approved :: Apache Software License',
        'Operating System :: MacOS',
        'Operating System :: POSIX :: Linux',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3 :: Only',
        'Programming Language :: Python :: Implementation :: CPython',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],

    # project packages
    packages = find_packages(where = 'src'),

    # project directory
    package_dir = {
        '': 'src',
    },

    # additional package data files that goes into the package itself
    package_data = {
        'zeckendorf.verify': ['README.md'],
        'zeckendorf.cli': ['README.md'],
    },

    # project keywords
    keywords = 'zeckendorf fibonacci golden ratio beatty number theory',

    entry_points={
        'zeckendorf.checks': discover_checks(),
        'console_scripts': [
            'zeckendorf = zeckendorf.cli.main:main',
        ],
    },

    python_requires = '>=3.8',

    # package dependencies
    install_requires=[
        "pyyaml>=5.1",  # sort_keys in safe_dump
        "mpmath",
    ],

    extras_require={
        'test': ['hypothesis'],
    },

    # external modules
    ext_modules = [],

    # non zip-safe (never tested it)
    zip_safe = False,
)
