"""
app.syntax
----------

Lexing, parsing and pretty-printing of C∥ source files.
"""

from .parser import parse_program, parse_statement
from .render import render
