import logging

import click

from models.field import make_field
from services.classify_service import ClassificationService
from utils.helpers import format_records, resolve_run_config, validate_bound, write_output

logger = logging.getLogger(__name__)


@click.command('classify')
@click.option('--field', 'field_m', type=int, default=None)
@click.option('--max', 'd_max', type=int, default=None, help='Classify every d in [2, max].')
@click.option('--squarefree-only', is_flag=True, default=None)
@click.option('--format', 'output_format', type=click.Choice(['csv', 'jsonl', 'table']), default=None)
@click.option('--output', 'output_path', type=click.Path(dir_okay=False), default=None)
@click.option('--threads', type=int, default=None)
@click.pass_context
def classify_command(ctx, field_m, d_max, squarefree_only, output_format, output_path, threads):
    """Write one classification row per d."""
    config = resolve_run_config(
        ctx.obj,
        field=field_m, max=d_max, squarefree_only=squarefree_only,
        format=output_format, output=output_path, threads=threads,
    )
    is_valid, error_message = validate_bound(config.d_max)
    if not is_valid:
        click.echo(f"error: {error_message}", err=True)
        return 1

    service = ClassificationService(make_field(config.field_m))
    records = service.classify_range(config.d_max, config.squarefree_only, config.threads)
    text = format_records(records, config.output_format)

    if config.output_path:
        write_output(text, config.output_path)
    else:
        click.echo(text, nl=False)
    return 0


@click.command('field-scan')
@click.option('--field', 'field_m', type=int, default=None)
@click.option('--max', 'd_max', type=int, default=None)
@click.option('--threads', type=int, default=None)
@click.pass_context
def field_scan_command(ctx, field_m, d_max, threads):
    """Report field-level predicates up to a bound."""
    config = resolve_run_config(ctx.obj, field=field_m, max=d_max, threads=threads)
    bound = config.d_max
    is_valid, error_message = validate_bound(bound)
    if not is_valid:
        click.echo(f"error: {error_message}", err=True)
        return 1

    summary = ClassificationService(make_field(config.field_m)).field_scan(bound, config.threads)
    for name, result in summary.items():
        if result['holds_to_bound']:
            click.echo(f"{name}: holds for all d <= {bound}")
        else:
            click.echo(f"{name}: fails, first witness {result['first_witness']}")
    return 0


classify_commands = [classify_command, field_scan_command]
