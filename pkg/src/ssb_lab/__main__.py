"""Allow ``python -m ssb_lab`` as an alias for the ``ssb-lab`` script."""

from .cli import console_entry

console_entry()
