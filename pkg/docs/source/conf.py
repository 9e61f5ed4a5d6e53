# Configuration file for the Sphinx documentation builder.
#
# For the full list of built-in configuration values, see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Project information -----------------------------------------------------
# https://www.sphinx-doc.org/en/master/usage/configuration.html#project-information
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path

project = "hierarchy-forge"
copyright = "2024, hierarchy-forge contributors"  # noqa: A001
author = "hierarchy-forge contributors"

try:
    release = version("hierarchy-forge")
except PackageNotFoundError:
    release = "unknown"


# -- General configuration ---------------------------------------------------
# https://www.sphinx-doc.org/en/master/usage/configuration.html#general-configuration

extensions = [
    "myst_parser",
    "sphinx.ext.autosectionlabel",
    "sphinx.ext.autodoc",
    "sphinx.ext.mathjax",
    "sphinx.ext.napoleon",
    "autoapi.extension",
]
# Generated equations are shown with $...$ and \begin{align*} blocks.
myst_enable_extensions = ["dollarmath", "amsmath"]

autoapi_type = "python"
autoapi_dirs = [f"{Path(__file__).parents[2]}/hierarchy_forge"]
autoapi_options = ["members", "show-inheritance", "show-module-summary", "imported-members"]
autosectionlabel_prefix_document = True

templates_path = ["_templates"]
exclude_patterns = []

# -- Options for HTML output -------------------------------------------------
# https://www.sphinx-doc.org/en/master/usage/configuration.html#options-for-html-output

html_theme = "sphinx_rtd_theme"
html_static_path = ["_static"]
