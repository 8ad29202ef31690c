# -*- coding: utf-8 -*-
#
# rshulthen documentation build configuration file
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

# Package root for autodoc
sys.path.insert(0, os.path.abspath('..'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
]

# Napoleon settings
napoleon_numpy_docstring = True
napoleon_include_private_with_doc = False
napoleon_include_special_with_doc = True
napoleon_use_param = True
napoleon_use_rtype = True

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

# General information about the project.
project = u'rshulthen'
copyright = u'2026, rshulthen developers'
author = u'rshulthen developers'

# The short X.Y version.
version = '0.1'
# The full version, including alpha/beta/rc tags.
release = '0.1.dev0'

language = None
exclude_patterns = ['_build']
pygments_style = 'sphinx'

# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinxdoc'
html_static_path = ['_static']
html_sidebars = {
  '**': ['localtoc.html', 'globaltoc.html', 'relations.html', 'sourcelink.html']
}
htmlhelp_basename = 'rshulthendoc'

# -- Options for LaTeX output ---------------------------------------------

latex_documents = [
  (master_doc, 'rshulthen.tex', u'rshulthen Documentation',
   u'rshulthen developers', 'manual'),
]

man_pages = [
    (master_doc, 'rshulthen', u'rshulthen Documentation',
     [author], 1)
]

intersphinx_mapping = {'python': ('https://docs.python.org/3', None),
                       'numpy': ('https://numpy.org/doc/stable/', None),
                       'scipy': ('https://docs.scipy.org/doc/scipy/', None)}
