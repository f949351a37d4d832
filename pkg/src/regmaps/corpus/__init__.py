"""Bundled group files: the regression corpus for the verify suite."""
