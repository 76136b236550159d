"""Subcommand implementations.

Every ``cmd_*`` takes the parsed argparse namespace and the active config class,
writes its output to ``out`` and returns the process exit code.
"""
import sys
import json
import logging
import functools

import pandas as pd

from app.exceptions import BoundExceededError, DescentsError, ParseError
from app.middleware import CommandLogger
from app.models import (
    CountResult,
    DistributionReport,
    DistributionRow,
    MapResult,
    TableReport,
    TableRow,
    TraceEvent,
    TransferResult,
)
from app.descents.counting import (
    Family,
    alpha,
    beta,
    closed_form_distribution,
    count_by_enumeration,
    descent_distribution,
    iter_family,
)
from app.descents.derived_maps import (
    MarkKind,
    MarkedWord,
    cyclesu_inverse,
    cyclesu_map,
    mark_zero,
    phi_T0,
    phi_T0_inverse,
    phi_U,
    phi_U_inverse,
    u_to_cycle,
)
from app.descents.necklaces import gr_transfer, permutation_to_necklaces, plan_transfer
from app.descents.perm_core import (
    Permutation,
    canonical_cycle_form,
    cycle_ending_with,
    descent_set,
    format_cycles,
    reverse_complement_word,
)
from app.descents.phi_engine import phi, phi_traced, psi, psi_traced
from app.descents.tasks import SUITES
from app.descents.utils import parse_descent_set, parse_permutation
from app.services.verification_service import VerificationService

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def handle_errors(func):
    """Turn library errors into a diagnostic on stderr and exit code 2."""
    @functools.wraps(func)
    def wrapper(args, config, out=None, err=None):
        out = out or sys.stdout
        err = err or sys.stderr
        try:
            return func(args, config, out)
        except (DescentsError, KeyError) as e:
            logger.debug(f"{type(e).__name__}: {str(e)}")
            message = e.args[0] if isinstance(e, KeyError) and e.args else str(e)
            print(f"error: {message}", file=err)
            return EXIT_USAGE
    return wrapper


def _emit(out, text):
    out.write(text if text.endswith('\n') else text + '\n')


def _cycle_text(p: Permutation) -> str:
    return format_cycles([cycle_ending_with(p, p.n)])


def _trace_events(trace):
    return [
        TraceEvent(iteration=e.iteration, step=e.step, swap=e.values, state=trace.format_state(e.state))
        for e in trace.events
    ]


def _input_text(args):
    for attr in ('cycle', 'perm', 'word'):
        value = getattr(args, attr, None)
        if value is not None:
            return value
    raise ParseError("One of --cycle, --perm or --word is required")


def _forward(kind, text, args, want_trace):
    """Return (image, trace, marked position) for the forward maps."""
    if kind in ('phi', 'psi'):
        source = parse_permutation(text)
        run = {'phi': (phi, phi_traced), 'psi': (psi, psi_traced)}[kind]
        if want_trace:
            image, trace = run[1](source)
            return image, trace, None
        return run[0](source), None, None

    if kind == 'cyclesu':
        if args.m is None:
            raise ParseError("--m is required for cyclesu")
        pi = parse_permutation(text)
        image = cyclesu_map(pi, args.m)
        tau = mark_zero(pi, args.m)
    else:
        tau = MarkedWord.parse(text)
        expected = MarkKind.TOP if kind == 'u' else MarkKind.ZERO
        if tau.kind is not expected:
            raise ParseError(f"{tau} is not marked with {'n+1' if kind == 'u' else '0'}")
        image = phi_U(tau) if kind == 'u' else phi_T0(tau)

    trace = None
    if want_trace:
        # the switches happen on the U_n side; zero marks go through the reverse-complement
        top = tau if tau.kind is MarkKind.TOP else tau.reverse_complement()
        trace = phi_traced(u_to_cycle(top))[1]
    return image, trace, tau.marked_pos


def _backward(kind, text, want_trace):
    """Return (image text, cycles text, trace, marked position) for --inverse."""
    sigma = parse_permutation(text)
    if kind == 'u':
        tau = phi_U_inverse(sigma)
    elif kind == 't0':
        tau = phi_T0_inverse(sigma)
    else:
        pi, m = cyclesu_inverse(sigma)
        trace = None
        if want_trace:
            rc_sigma = Permutation(reverse_complement_word(sigma.word))
            trace = psi_traced(rc_sigma)[1]
        return str(pi), str(canonical_cycle_form(pi)), trace, m
    trace = None
    if want_trace:
        source = sigma if kind == 'u' else Permutation(reverse_complement_word(sigma.word))
        trace = psi_traced(source)[1]
    return str(tau), str(canonical_cycle_form(tau.restore())), trace, tau.marked_pos


@CommandLogger.wrap('map')
@handle_errors
def cmd_map(args, config, out):
    text = _input_text(args)
    kind = args.kind
    if args.inverse and kind in ('phi', 'psi'):
        kind = 'psi' if kind == 'phi' else 'phi'
    if args.inverse and kind in ('u', 't0', 'cyclesu'):
        one_line, cycles, trace, marked = _backward(kind, text, args.trace)
    else:
        image, trace, marked = _forward(kind, text, args, args.trace)
        one_line = str(image)
        cycles = _cycle_text(image) if kind == 'psi' else str(canonical_cycle_form(image))

    if args.format == 'json':
        result = MapResult(
            kind=args.kind,
            inverse=args.inverse,
            input=text,
            one_line=one_line,
            cycles=cycles,
            marked_position=marked,
            trace=_trace_events(trace) if trace is not None else None,
        )
        _emit(out, result.model_dump_json(indent=2))
        return EXIT_OK

    lines = [one_line, cycles]
    if marked is not None and args.inverse:
        lines.append(f"marked position {marked}")
    if trace is not None:
        for line in trace.to_lines():
            logger.debug(line)
        lines.extend(trace.narrate())
    _emit(out, '\n'.join(lines))
    return EXIT_OK


def table_rows(n):
    """phi on C_{n+1}, grouped by descent set and ordered by cycle inside a group."""
    rows = []
    for pi in iter_family(Family.C, n + 1):
        sigma = phi(pi)
        rows.append((descent_set(sigma), cycle_ending_with(pi, n + 1), pi, sigma))
    rows.sort(key=lambda row: (row[0].sort_key, row[1]))
    return [
        TableRow(
            cycle=format_cycles([cycle]),
            one_line=str(pi),
            image=str(sigma),
            descent_set=sorted(d.elements),
        )
        for d, cycle, pi, sigma in rows
    ]


@CommandLogger.wrap('table')
@handle_errors
def cmd_table(args, config, out):
    if args.n > config.MAX_TABLE_N:
        raise BoundExceededError(f"table is limited to n <= {config.MAX_TABLE_N}")
    rows = table_rows(args.n)
    if args.format == 'json':
        _emit(out, TableReport(n=args.n, rows=rows).model_dump_json(indent=2))
        return EXIT_OK
    frame = pd.DataFrame(
        [{'cycle': r.cycle, 'one_line': r.one_line, 'image': r.image,
          'descent_set': '{' + ','.join(str(i) for i in r.descent_set) + '}'} for r in rows]
    )
    if args.format == 'csv':
        _emit(out, frame.to_csv(index=False))
    else:
        _emit(out, frame.to_string(index=False))
    return EXIT_OK


def _report_text(report):
    status = 'PASS' if report.passed else 'FAIL'
    lines = [f"{status} suite={report.suite} n={report.n} checked={report.checked} "
             f"failures={report.failed} millis={report.millis:.0f}"]
    for failure in report.failures:
        lines.append(f"  {failure.input}: expected {failure.expected}, got {failure.actual}")
    return '\n'.join(lines)


@CommandLogger.wrap('verify')
@handle_errors
def cmd_verify(args, config, out):
    service = VerificationService(config)
    names = list(SUITES) if args.suite == 'all' else [args.suite]
    n = None if args.suite == 'all' else args.n
    reports = [service.verify_suite(name, n=n, jobs=args.jobs) for name in names]

    if args.format == 'json':
        if len(reports) == 1:
            _emit(out, reports[0].model_dump_json(indent=2))
        else:
            _emit(out, json.dumps([r.model_dump() for r in reports], indent=2))
    else:
        _emit(out, '\n'.join(_report_text(r) for r in reports))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


@CommandLogger.wrap('count')
@handle_errors
def cmd_count(args, config, out):
    n = args.n
    if args.mode == 'distribution':
        if args.family is None:
            dist = closed_form_distribution(n)
        else:
            if n > config.MAX_EXHAUSTIVE_N:
                raise BoundExceededError(f"enumeration is limited to n <= {config.MAX_EXHAUSTIVE_N}")
            family = Family(args.family)
            size = n + 1 if family is Family.C else n
            dist = descent_distribution(iter_family(family, size), n, family.value)
        if args.format == 'json':
            report = DistributionReport(
                n=n, source=dist.source, total=dist.total,
                rows=[DistributionRow(descent_set=sorted(s.elements), count=c) for s, c in dist.rows()],
            )
            _emit(out, report.model_dump_json(indent=2))
        else:
            _emit(out, dist.to_frame().to_string(index=False))
        return EXIT_OK

    subset = parse_descent_set(args.subset or '', n)
    if args.mode == 'exact':
        value = alpha(n, subset)
    elif args.mode == 'contained':
        value = beta(n, subset)
    else:
        if n > config.MAX_EXHAUSTIVE_N:
            raise BoundExceededError(f"enumeration is limited to n <= {config.MAX_EXHAUSTIVE_N}")
        value = count_by_enumeration(n, subset, exact=True)

    if args.format == 'json':
        result = CountResult(n=n, subset=sorted(subset.elements), mode=args.mode, value=value)
        _emit(out, result.model_dump_json(indent=2))
    else:
        _emit(out, str(value))
    return EXIT_OK


@CommandLogger.wrap('transfer')
@handle_errors
def cmd_transfer(args, config, out):
    pi = parse_permutation(args.perm)
    source = parse_descent_set(args.source, pi.n)
    target = parse_descent_set(args.target, pi.n)
    sigma = gr_transfer(pi, source, target)
    necklaces = None
    if args.show_necklaces:
        necklaces = permutation_to_necklaces(pi, source, plan_transfer(source, target).alpha).format()

    if args.format == 'json':
        result = TransferResult(
            input=str(pi),
            source=sorted(source.elements),
            target=sorted(target.elements),
            image=str(sigma),
            cycles=str(canonical_cycle_form(sigma)),
            necklaces=necklaces,
        )
        _emit(out, result.model_dump_json(indent=2, by_alias=True))
        return EXIT_OK

    lines = [str(sigma), str(canonical_cycle_form(sigma))]
    if necklaces is not None:
        lines.append(necklaces)
    _emit(out, '\n'.join(lines))
    return EXIT_OK
