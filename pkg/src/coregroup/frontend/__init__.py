"""Text format and command-line driver."""

from .dsl import DSLError, DSLWarning, format_block, parse_document, parse_input
