import logging

import click

from models.field import make_field
from services.splitting_service import splitting_type
from services.totient_service import TotientEngine, phi_fast, phi_oracle
from services.verification_service import crt_suite
from utils.helpers import format_report, resolve_run_config, validate_modulus

logger = logging.getLogger(__name__)


@click.command('phi')
@click.option('--field', 'field_m', type=int, default=None, help='Squarefree radicand m of Q(sqrt(m)); 1 for Q.')
@click.option('--d', 'd', type=int, required=True, help='Modulus d >= 1.')
@click.option('--check', is_flag=True, help='Compare against the inverse-search oracle.')
@click.option('--oracle-cap', type=int, default=None, help='Largest d the oracle may enumerate.')
@click.pass_context
def phi_command(ctx, field_m, d, check, oracle_cap):
    """Print phi_K(d)."""
    is_valid, error_message = validate_modulus(d)
    if not is_valid:
        click.echo(f"error: {error_message}", err=True)
        return 1

    config = resolve_run_config(ctx.obj, field=field_m, oracle_cap=oracle_cap)
    field = make_field(config.field_m)
    value = phi_fast(TotientEngine(field), d)
    click.echo(value)

    if check:
        cap = config.oracle_cap
        if d > cap:
            logger.warning(f"Skipping oracle check: d = {d} is above the cap {cap}")
            click.echo(f"oracle: skipped (d above cap {cap})")
            return 0
        expected = phi_oracle(field, d, cap)
        if expected != value:
            logger.error(f"Oracle disagreement over {field} at d = {d}: {value} != {expected}")
            click.echo(f"oracle: MISMATCH {expected}")
            return 2
        click.echo("oracle: OK")
    return 0


@click.command('split')
@click.option('--field', 'field_m', type=int, default=None)
@click.option('--p', 'p', type=int, required=True, help='Rational prime.')
@click.pass_context
def split_command(ctx, field_m, p):
    """Print how the prime p factors in O_K."""
    config = resolve_run_config(ctx.obj, field=field_m)
    click.echo(splitting_type(make_field(config.field_m), p).value)
    return 0


@click.command('crt')
@click.option('--field', 'field_m', type=int, default=None)
@click.option('--m', 'm', type=int, required=True)
@click.option('--n', 'n', type=int, required=True)
@click.option('--oracle-cap', type=int, default=None)
@click.pass_context
def crt_command(ctx, field_m, m, n, oracle_cap):
    """Check Z_mn|_K = Z_m|_K x Z_n|_K exhaustively."""
    config = resolve_run_config(ctx.obj, field=field_m, oracle_cap=oracle_cap)
    report = crt_suite(make_field(config.field_m), m, n, config.oracle_cap)
    click.echo(format_report(report), nl=False)
    return 0 if report.passed else 2


totient_commands = [phi_command, split_command, crt_command]
