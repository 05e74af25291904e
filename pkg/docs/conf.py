# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.
#
# http://www.sphinx-doc.org/en/master/config

import os
import sys

# -- Path setup --------------------------------------------------------------

sys.path.insert(0, os.path.abspath('..'))

import pyphasewizard

# -- Project information -----------------------------------------------------

project = 'PyPhaseWizard'
copyright = ('2021, UIBCDF Lab and authors.'
        'Project structure based on the Computational Molecular Science Python Cookiecutter version 1.5')
author = 'UIBCDF Lab'

# The short X.Y version
version = pyphasewizard.__version__.split('+')[0]
# The full version, including alpha/beta/rc tags
release = pyphasewizard.__version__


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
    'sphinx.ext.githubpages',
    'nbsphinx',
    'recommonmark',
    'sphinx_markdown_tables',
]

autosummary_generate = True
napoleon_google_docstring = False
napoleon_use_param = False
napoleon_use_ivar = True

source_suffix = {
    '.rst': 'restructuredtext',
    '.md': 'markdown'
}

# The master toctree document.
master_doc = 'index'

language = None

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store', '**.ipynb_checkpoints']

pygments_style = 'default'


# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'

htmlhelp_basename = 'pyphasewizarddoc'


# -- Options for LaTeX output ------------------------------------------------

latex_elements = {
}

latex_documents = [
        (master_doc, 'pyphasewizard.tex', 'PyPhaseWizard Documentation',
            'pyphasewizard', 'manual'),
]


# -- Options for manual page output ------------------------------------------

man_pages = [
        (master_doc, 'pyphasewizard', 'PyPhaseWizard Documentation',
            [author], 1)

]


# -- Options for intersphinx extension ---------------------------------------

intersphinx_mapping = {
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None),
    'pint': ('https://pint.readthedocs.io/en/stable/', None),
}
