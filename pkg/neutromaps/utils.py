# -*- coding: utf-8 -*-

"""Utility functions

"""

import logging
import os

logger = logging.getLogger(__name__)


def resolve_path(name: str, relative_to=None) -> str:
    """Resolve ``name`` against the directory of the file ``relative_to``."""
    name = os.path.expanduser(name)
    if relative_to is None or os.path.isabs(name):
        return name
    resolved = os.path.join(os.path.dirname(os.path.abspath(relative_to)), name)
    logger.debug("resolved %s against %s to %s", name, relative_to, resolved)
    return resolved


def read_text(path) -> str:
    with open(path, encoding="utf-8") as h:
        return h.read()
