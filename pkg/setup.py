#!/usr/bin/env python
# Licensed under a 3-clause BSD style license - see LICENSE.rst
from __future__ import absolute_import, division, print_function
#
# Standard imports
#
import glob, os
from setuptools import setup
#
# Begin setup
#
setup_keywords = dict()
#
# THESE SETTINGS NEED TO BE CHANGED FOR EVERY PRODUCT.
#
setup_keywords['name'] = 'rshulthen'
setup_keywords['description'] = 'Bound states of the Dirac equation with a Hulthen plus ring-shaped potential'
setup_keywords['author'] = 'rshulthen developers'
setup_keywords['author_email'] = ''
setup_keywords['license'] = 'BSD'
setup_keywords['url'] = ''
#
# END OF SETTINGS THAT NEED TO BE CHANGED.
#
setup_keywords['version'] = '0.1.dev0'
#
# Use README.md as long_description.
#
setup_keywords['long_description'] = ''
if os.path.exists('README.md'):
    with open('README.md') as readme:
        setup_keywords['long_description'] = readme.read()
#
# Set other keywords for the setup function.
#
if os.path.isdir('bin'):
    setup_keywords['scripts'] = [fname for fname in glob.glob(os.path.join('bin', '*'))
        if not os.path.basename(fname).endswith('.rst')]
setup_keywords['provides'] = [setup_keywords['name']]
setup_keywords['python_requires'] = '>=3.7'
setup_keywords['install_requires'] = ['numpy', 'scipy', 'astropy']
setup_keywords['zip_safe'] = False
setup_keywords['packages'] = ['rshulthen', 'rshulthen.solvers', 'rshulthen.scripts',
                              'rshulthen.tests', 'rshulthen.solvers.tests']
setup_keywords['setup_requires'] = ['pytest-runner']
setup_keywords['tests_require'] = ['pytest']

# Autogenerate command-line scripts.
#
setup_keywords['entry_points'] = {
    'console_scripts': ['rshulthen = rshulthen.scripts.run_rshulthen:main']}

#
# Test input files
#
setup_keywords['package_data'] = {'rshulthen.tests': ['files/*'],
                                  '': ['*.rst', '*.txt']}
setup_keywords['include_package_data'] = True

#
# Run setup command.
#
setup(**setup_keywords)
