import logging
import sys

import click

from config import Config
from commands import classify_commands, totient_commands, verify_commands
from utils.errors import LehmerKError

# Exit codes: 0 pass, 1 usage, 2 counterexample or mismatch, 3 I/O
EXIT_USAGE = 1
EXIT_IO = 3


def configure_logging(level: str = None):
    logging.basicConfig(
        level=(level or Config.LOG_LEVEL).upper(),
        format=Config.LOG_FORMAT,
        stream=sys.stderr,
    )


def create_cli() -> click.Group:
    @click.group()
    @click.option('--config', 'config_path', type=click.Path(dir_okay=False), default=None,
                  help='Optional key=value settings file.')
    @click.option('--log-level', default=None, help='DEBUG, INFO, WARNING or ERROR.')
    @click.pass_context
    def cli(ctx, config_path, log_level):
        """Generalized Euler totient over class-number-one quadratic fields."""
        ctx.ensure_object(dict)
        ctx.obj['config_path'] = config_path
        if log_level:
            logging.getLogger().setLevel(log_level.upper())

    # Register command groups
    for command in totient_commands + classify_commands + verify_commands:
        cli.add_command(command)

    return cli


def main(argv=None) -> int:
    configure_logging()
    logger = logging.getLogger(__name__)
    cli = create_cli()

    try:
        result = cli.main(args=argv, prog_name='lehmerk', standalone_mode=False)
    except click.exceptions.Abort:
        click.echo("Aborted", err=True)
        return EXIT_USAGE
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    except LehmerKError as e:
        logger.error(f"{type(e).__name__}: {str(e)}")
        click.echo(f"error: {e}", err=True)
        return e.exit_code
    except OSError as e:
        logger.error(f"I/O failure: {str(e)}")
        click.echo(f"error: {e}", err=True)
        return EXIT_IO
    except ValueError as e:
        click.echo(f"error: {e}", err=True)
        return EXIT_USAGE

    return result if isinstance(result, int) else 0


if __name__ == '__main__':
    sys.exit(main())
