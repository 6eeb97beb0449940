# -*- coding: utf-8 -*-
#
# pellkit documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing
# dir.

import sys, os

sys.path.insert(0, os.path.abspath('../..'))

# -- General configuration -----------------------------------------------------

extensions = [ 'sphinxcontrib.programoutput' ]

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'pellkit'
copyright = u'2026, The pellkit Authors'

exclude_patterns = []

pygments_style = 'sphinx'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'default'

htmlhelp_basename = 'pellkitdoc'

# -- Options for LaTeX output --------------------------------------------------

latex_elements = {
}

latex_documents = [
  ('index', 'pellkit.tex', u'pellkit Documentation',
   u'The pellkit Authors', 'manual'),
]

# -- Options for manual page output --------------------------------------------

man_pages = [
    ('index', 'pellkit', u'pellkit Documentation',
     [u'The pellkit Authors'], 1)
]
