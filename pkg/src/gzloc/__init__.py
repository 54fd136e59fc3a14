"""Localization of finite categories by zigzags and by left fractions."""

__version__ = "0.1.0"
