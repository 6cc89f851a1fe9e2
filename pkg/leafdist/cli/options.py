import logging
import sys
from functools import wraps

import click
from click import make_pass_decorator, option

from leafdist.cli import environment
from leafdist.cli.output import OUTPUT_FORMATS, ClickEchoHandler
from leafdist.config import Config

log = logging.getLogger(__name__)

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


class State(object):
    def __init__(self):
        self.no_verify = False
        self._verbose = False
        self._config = None

    @property
    def config(self) -> Config:
        if self._config is None:
            self._config = Config.get_instance()
        return self._config

    def _get_verbose(self) -> bool:
        if environment.LEAFDIST_VERBOSE is not None:
            return True
        return self._verbose

    def _set_verbose(self, verbose):
        self._verbose = verbose

    verbose = property(_get_verbose, _set_verbose)


pass_state = make_pass_decorator(State, ensure=True)


def configure_logging(verbose: bool) -> None:
    logger = logging.getLogger("leafdist")
    if not any(isinstance(handler, ClickEchoHandler) for handler in logger.handlers):
        handler = ClickEchoHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)
        logger.propagate = False
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)


def verbose_callback(context, _: str, verbose=False):
    state = context.ensure_object(State)
    # a flag given on the group must survive the default of the subcommand
    state.verbose = state._verbose or verbose
    configure_logging(state.verbose)


verbose_option = click.option(
    "-v",
    "--verbose",
    is_flag=True,
    is_eager=True,
    callback=verbose_callback,
    expose_value=False,
    help="Log debug output and return stack trace on error.",
)


def default_options(f):
    defaults = [no_verify_option, verbose_option, error_handler, pass_state]
    for decorator in defaults:
        f = decorator(f)
    return f


def no_verify_option(f):
    def callback(ctx, param, value):
        state = ctx.ensure_object(State)
        state.no_verify = state.no_verify or value

    return option(
        "--no-verify",
        type=bool,
        help="Skip all verification dialogs and answer them with yes.",
        required=False,
        is_flag=True,
        expose_value=False,
        default=False,
        callback=callback,
    )(f)


output_format_option = click.option(
    "--format",
    "output_format",
    type=click.Choice(OUTPUT_FORMATS, case_sensitive=False),
    help="Format of the output. Defaults to `output.format` from the config.",
    required=False,
)

output_option = click.option(
    "--output",
    type=click.Path(dir_okay=False, writable=True),
    help="Write the output to this file instead of standard output.",
    required=False,
    default=None,
)


def output_options(f):
    return output_format_option(output_option(f))


def error_handler(f):
    @wraps(f)
    def wrapper(*args, **kwargs):
        state = args[0]
        if not isinstance(state, State):
            raise TypeError(
                "First argument is not a state, make sure that the `error_handler` decorator comes below `pass_state`"
            )
        try:
            f(*args, **kwargs)
        except Exception as e:
            _silence_exception(e, verbose=state.verbose)

    return wrapper


def _silence_exception(e: Exception, verbose: bool = False):
    if verbose:
        log.exception(f"{type(e).__name__} while running the command.")
    elif hasattr(e, "format_message"):
        click.echo(e.format_message(), err=True)
    elif isinstance(e, (KeyError, ValueError)):
        click.echo(f"{type(e).__name__}: {str(e)}", err=True)
    else:
        click.echo(f"Exception of type {type(e).__name__} occurred.", err=True)
    if not verbose:
        click.echo("Run with `--verbose` for complete error.", err=True)
    sys.exit(getattr(e, "exit_code", 1))


class BadIntegerParameter(click.BadParameter):
    exit_code = 1


class IntegerParamType(click.ParamType):
    """Like click's INT, but a malformed value is a domain error (exit 1) instead of a usage error (exit 2)."""

    name = "integer"

    def convert(self, value, param, ctx):
        if isinstance(value, int) and not isinstance(value, bool):
            return value
        try:
            return int(value)
        except (TypeError, ValueError):
            raise BadIntegerParameter(f"{value!r} is not an integer.", ctx=ctx, param=param)


INTEGER = IntegerParamType()
