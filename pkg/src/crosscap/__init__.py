"""Certificates that punctured non-orientable mapping class groups are generated by involutions."""

__version__ = "0.1.0"
