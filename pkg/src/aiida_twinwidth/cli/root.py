# -*- coding: utf-8 -*-
"""Root command group of the `aiida-twinwidth` command line, mapping errors onto exit codes."""
from __future__ import annotations

import sys

from aiida.cmdline.utils import echo
import click

from aiida_twinwidth.exceptions import LimitExceededError, SequenceWidthError, TwinWidthError

EXIT_SUCCESS = 0
EXIT_INVALID = 1
EXIT_VERIFICATION_FAILED = 2
EXIT_LIMIT_EXCEEDED = 3


class TwinWidthGroup(click.Group):
    """Group whose commands return their exit code and whose errors are mapped onto exit codes.

    0 success, 1 usage, parsing or invalid input, 2 verification failure, 3 budget or cap exceeded.
    """

    def main(self, *args, **kwargs):  # pylint: disable=arguments-differ
        """Run the command line and exit with the code returned by the command or mapped from its error."""
        kwargs['standalone_mode'] = False

        try:
            result = super().main(*args, **kwargs)
        except click.ClickException as exception:
            exception.show()
            sys.exit(EXIT_INVALID)
        except click.Abort:
            echo.echo_error('Aborted!')
            sys.exit(EXIT_INVALID)
        except LimitExceededError as exception:
            echo.echo_error(str(exception))
            sys.exit(EXIT_LIMIT_EXCEEDED)
        except SequenceWidthError as exception:
            echo.echo_error(str(exception))
            sys.exit(EXIT_VERIFICATION_FAILED)
        except (TwinWidthError, ValueError, OSError) as exception:
            echo.echo_error(str(exception))
            sys.exit(EXIT_INVALID)

        sys.exit(result if isinstance(result, int) else EXIT_SUCCESS)


@click.group('aiida-twinwidth', cls=TwinWidthGroup, context_settings={'help_option_names': ['-h', '--help']})
def cmd_root():
    """Verify, build and convert contraction sequences of graphs and matrices."""
