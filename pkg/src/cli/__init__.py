"""
Typer CLI for the Pascalian toolkit
"""
from .main import app

__all__ = ["app"]
