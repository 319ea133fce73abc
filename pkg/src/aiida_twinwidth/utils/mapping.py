# -*- coding: utf-8 -*-
"""Utilities to deal with logging containers and option dictionaries."""
from __future__ import annotations

import logging


def get_logging_container():
    """Return an `AttributeDict` that can be used to map logging messages to certain log levels.

    Functions that do not own a logger, like the raw parsers, fill this container; the caller then pipes the messages
    through its own logger with :func:`emit_logs`.

    :return: :py:class:`~aiida.common.extendeddicts.AttributeDict`
    """
    from aiida.common import AttributeDict

    return AttributeDict({
        'debug': [],
        'info': [],
        'warning': [],
        'error': [],
        'critical': [],
    })


def emit_logs(logger: logging.Logger, logging_dictionaries, ignore: list[str] | None = None):
    """Emit the messages of one or more logging containers through `logger`, at the level of the key they are under.

    Empty messages, messages in `ignore` and keys that are not log levels are skipped.
    """
    if not isinstance(logging_dictionaries, (list, tuple)):
        logging_dictionaries = [logging_dictionaries]

    skipped = set(ignore or [])

    for logs in logging_dictionaries:
        for level, messages in logs.items():
            log = getattr(logger, level, None)
            if log is None:
                continue
            for message in filter(None, messages):
                if message.strip() and message.strip() not in skipped:
                    log(message.strip())


def _lowercase_dict(dictionary: dict, dict_name: str) -> dict:
    """Return a copy of the dictionary with lowercase keys.

    :raises InputValidationError: if two keys collide once compared case-insensitively
    """
    from collections import Counter

    from aiida.common import InputValidationError

    if not isinstance(dictionary, dict):
        raise TypeError(f'_lowercase_dict accepts only dictionaries as argument, got {type(dictionary)}')

    new_dict = {str(key).lower(): value for key, value in dictionary.items()}

    if len(new_dict) != len(dictionary):
        num_items = Counter(str(key).lower() for key in dictionary)
        double_keys = ','.join(key for key, count in num_items.items() if count > 1)
        raise InputValidationError(
            f'Inside the dictionary `{dict_name}` there are the following keys that are repeated more than once '
            f'when compared case-insensitively: {double_keys}. This is not allowed.'
        )

    return new_dict
