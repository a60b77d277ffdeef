import logging

import click

from models.field import make_field
from services.verification_service import VerificationService, ratio_scan
from services.zeta_service import zeta_bounds
from utils.helpers import format_report, parse_rational, resolve_run_config, validate_bound

logger = logging.getLogger(__name__)


@click.command('verify')
@click.option('--suite', required=True, help="Suite name, or 'all'.")
@click.option('--field', 'field_m', type=int, default=None)
@click.option('--max', 'd_max', type=int, default=None)
@click.option('--threads', type=int, default=None)
@click.option('--oracle-cap', type=int, default=None)
@click.pass_context
def verify_command(ctx, suite, field_m, d_max, threads, oracle_cap):
    """Run a verification suite; exit 2 on any counterexample."""
    config = resolve_run_config(ctx.obj, field=field_m, max=d_max, threads=threads,
                                oracle_cap=oracle_cap)
    bound = config.d_max
    is_valid, error_message = validate_bound(bound, least=1)
    if not is_valid:
        click.echo(f"error: {error_message}", err=True)
        return 1

    service = VerificationService(make_field(config.field_m), config.threads, config.oracle_cap)
    names = service.applicable_suites() if suite == 'all' else [suite]

    passed = True
    for name in names:
        report = service.run_suite(name, bound)
        click.echo(format_report(report), nl=False)
        passed = passed and report.passed
    return 0 if passed else 2


@click.command('scan-ratio')
@click.option('--w', 'w', type=int, required=True, help='Squarefree divisor w.')
@click.option('--l', 'l_text', required=True, help='Target ratio as num/den.')
@click.option('--max', 'd_max', type=int, default=None)
@click.option('--threads', type=int, default=None)
@click.pass_context
def scan_ratio_command(ctx, w, l_text, d_max, threads):
    """List squarefree d <= max with w | d and (d - 1)/phi(d) = l."""
    try:
        l = parse_rational(l_text)
    except ValueError as e:
        click.echo(f"error: {e}", err=True)
        return 1

    config = resolve_run_config(ctx.obj, max=d_max, threads=threads)
    result = ratio_scan(w, l, config.d_max, config.threads)
    for d in result.matches:
        click.echo(d)
    click.echo(f"hypothesis l < w/phi(w): {'true' if result.hypothesis_holds else 'false'}")
    return 0


@click.command('zeta')
@click.option('--s', 's', type=int, default=2)
@click.option('--tol', 'tol_text', default='1/100', help='Bracket width as num/den.')
def zeta_command(s, tol_text):
    """Bracket zeta(s) between exact rationals."""
    try:
        tol = parse_rational(tol_text)
    except ValueError as e:
        click.echo(f"error: {e}", err=True)
        return 1
    if s < 2 or tol <= 0:
        click.echo("error: need s >= 2 and a positive tolerance", err=True)
        return 1

    bound = zeta_bounds(s, tol)
    click.echo(f"s: {s}")
    click.echo(f"terms: {bound.terms}")
    click.echo(f"lower: {bound.lower.decimal()}")
    click.echo(f"upper: {bound.upper.decimal()}")
    click.echo(f"lower exact: {bound.lower}")
    click.echo(f"upper exact: {bound.upper}")
    click.echo(f"zeta(s) < 2: {'true' if bound.upper < 2 else 'false'}")
    return 0


verify_commands = [verify_command, scan_ratio_command, zeta_command]
