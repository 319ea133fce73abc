# -*- coding: utf-8 -*-
"""Raw parsers of the text formats, returning parsed objects and logging containers."""
