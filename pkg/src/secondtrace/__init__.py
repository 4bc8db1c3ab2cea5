"""Second trace forms and Witt classes over fields of characteristic two."""

__version__ = "0.1.0"
