"""
Sub-commands of the ``leafspan`` CLI.

Every module here exposes ``setup(cli)``; ``LeafSpanCLI.load_commands``
imports them in name order.
"""
