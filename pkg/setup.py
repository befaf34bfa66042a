import sys

from setuptools import setup

import weylext

if sys.version_info < (3, 8):
    print('weyl-ext requires Python 3.8 or newer!')
    sys.exit()

with open('requirements/production.txt') as f:
    requirements = f.read().splitlines()

with open('README.rst') as f:
    long_description = f.read()

setup(
    name='weyl-ext',
    version=weylext.__version__,
    python_requires='>=3.8',
    description='Exact dimensions of Ext-groups between Weyl modules for GL2 in positive characteristic.',
    long_description=long_description,
    packages=['weylext'],
    scripts=['bin/weyl-ext.py'],
    install_requires=requirements,
    test_suite='weylext.test',
    classifiers=[
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
