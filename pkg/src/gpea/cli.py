"""Command line front end and the plain-text model format.

A model file looks like::

    # the four-element Boolean algebra
    gpea 4
    labels 0 a b 1
    sum 1 2 3
    sum 2 1 3

Sums with 0 are implicit.  Exit codes: 0 ok, 1 usage, 2 invalid model,
3 law failure.
"""
from __future__ import annotations

import argparse
import signal
import sys
import time
from contextlib import contextmanager
from typing import Optional

from gpea.axioms import is_commutative, is_pea, top_of
from gpea.center import center_unit, central_elements, centerless_split, pi_c
from gpea.core import DomainError, FiniteGpea, GpeaError, InvalidModelError, UsageError, fill_zero_sums
from gpea.construct import DEFAULT_ORDER_CAP, enumerate_gpeas
from gpea.cover import cover_system, is_cogpea
from gpea.exocenter import exocenter, ideals
from gpea.typetheory import (
    atoms,
    classify,
    closure_gamma,
    disjoint_complement,
    double_complement,
    downset,
    fundamental_decomposition,
    gamma_image,
    is_td,
    td_context,
    td_generated,
    tdset_from_pea_class,
    type_I_II_III,
    type_I_flags,
)

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_LAWS = 0, 1, 2, 3


class ModelSyntaxError(UsageError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


# model files ----------------------------------------------------------------

def parse_model(text: str) -> FiniteGpea:
    """Parse a model file and validate it.

    Raises :class:`ModelSyntaxError` for malformed lines and
    :class:`InvalidModelError` (with witnesses) when the table is not a GPEA.
    """
    n = None
    labels = None
    sums = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        head = words[0]
        if n is None:
            if head != "gpea" or len(words) != 2:
                raise ModelSyntaxError(lineno, "expected header 'gpea <n>'")
            n = _int(words[1], lineno)
            if n < 1:
                raise ModelSyntaxError(lineno, "a model needs at least one element")
        elif head == "labels":
            if labels is not None:
                raise ModelSyntaxError(lineno, "labels given twice")
            labels = words[1:]
            if len(labels) != n or len(set(labels)) != n:
                raise ModelSyntaxError(lineno, f"expected {n} distinct labels")
        elif head == "sum":
            if len(words) != 4:
                raise ModelSyntaxError(lineno, "expected 'sum <i> <j> <k>'")
            i, j, k = (_int(w, lineno) for w in words[1:])
            for v in (i, j, k):
                if not 0 <= v < n:
                    raise ModelSyntaxError(lineno, f"element {v} out of range 0..{n - 1}")
            if sums.get((i, j), k) != k:
                raise ModelSyntaxError(lineno, f"sum {i} {j} already given as {sums[i, j]}")
            sums[i, j] = k
        elif head == "gpea":
            raise ModelSyntaxError(lineno, "header given twice")
        else:
            raise ModelSyntaxError(lineno, f"unknown directive {head!r}")
    if n is None:
        raise ModelSyntaxError(1, "missing header 'gpea <n>'")
    t = [[None] * n for _ in range(n)]
    for (i, j), k in sums.items():
        t[i][j] = k
    return FiniteGpea(fill_zero_sums(t), labels)


def _int(word: str, lineno: int) -> int:
    try:
        return int(word)
    except ValueError:
        raise ModelSyntaxError(lineno, f"{word!r} is not an integer") from None


def serialize_model(E: FiniteGpea) -> str:
    """Canonical text: header, labels if any, then sorted nonzero sums."""
    out = [f"gpea {E.n}"]
    if E.labels:
        out.append("labels " + " ".join(E.labels))
    for a in range(1, E.n):
        for b in range(1, E.n):
            c = E.table[a][b]
            if c is not None:
                out.append(f"sum {a} {b} {c}")
    return "\n".join(out) + "\n"


def load_model(path: str) -> FiniteGpea:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_model(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


# set specs ------------------------------------------------------------------

def parse_set(E: FiniteGpea, spec: str) -> frozenset:
    """``list:i,j`` | ``labels:a,b`` | ``center`` | ``atoms`` | ``all`` | ``pea-class:commutative``."""
    kind, sep, arg = spec.partition(":")
    if kind == "list" and sep:
        items = [w for w in arg.split(",") if w]
        try:
            out = frozenset(int(w) for w in items)
        except ValueError:
            raise UsageError(f"bad element list {arg!r}") from None
        E.check(*out)
        return out
    if kind == "labels" and sep:
        names = [w for w in arg.split(",") if w]
        index = {E.name(a): a for a in range(E.n)}
        missing = [w for w in names if w not in index]
        if missing:
            raise UsageError(f"unknown labels {', '.join(missing)}")
        return frozenset(index[w] for w in names)
    if not sep:
        if spec == "center":
            return central_elements(E)
        if spec == "atoms":
            return atoms(E)
        if spec == "all":
            return frozenset(range(E.n))
    if spec == "pea-class:commutative":
        return tdset_from_pea_class(E, is_commutative)
    raise UsageError(f"unknown set spec {spec!r}")


# rendering ------------------------------------------------------------------

class Out:
    """Collects report lines; machine lines are ``key=value`` records."""

    def __init__(self, machine: bool):
        self.machine = machine
        self.lines = []

    def text(self, line: str = ""):
        if not self.machine:
            self.lines.append(line)

    def record(self, kind: str, **fields):
        if self.machine:
            parts = [f"record={kind}"] + [f"{k}={_value(v)}" for k, v in fields.items()]
            self.lines.append(" ".join(parts))

    def emit(self, stream):
        if self.lines:
            stream.write("\n".join(self.lines) + "\n")
        self.lines = []


def _value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    if isinstance(v, (list, tuple, frozenset, set)):
        return ",".join(_value(x) for x in v) or "-"
    return str(v).replace(" ", "_")


def fmt_set(E: FiniteGpea, S) -> str:
    return "{" + ",".join(E.name(a) for a in sorted(S)) + "}"


def fmt_map(p) -> str:
    """``1`` for the identity, ``0`` for the zero map, else ``pi`` of the image."""
    if p.is_identity:
        return "1"
    if p.is_zero:
        return "0"
    return "pi" + fmt_set(p.E, p.image)


# commands -------------------------------------------------------------------

def cmd_validate(args, out):
    E = load_model(args.file)
    out.text(f"valid GPEA with {E.n} elements and {E.sum_count()} nonzero sums")
    out.record("validate", status="valid", n=E.n, sums=E.sum_count())
    return EXIT_OK


def cmd_info(args, out):
    E = load_model(args.file)
    top = top_of(E)
    Gamma = central_elements(E)
    X = exocenter(E)
    covers = [(a, b) for a in range(E.n) for b in range(E.n)
              if a != b and E.leq[a][b]
              and not any(c not in (a, b) and E.leq[a][c] and E.leq[c][b] for c in range(E.n))]
    out.text(f"elements: {E.n}  ({' '.join(E.name(a) for a in range(E.n))})")
    out.text(f"nonzero sums: {E.sum_count()}")
    out.text(f"pea: {'yes, top ' + E.name(top) if is_pea(E) else 'no'}")
    out.text(f"commutative: {'yes' if is_commutative(E) else 'no'}")
    out.text("hasse: " + " ".join(f"{E.name(a)}<{E.name(b)}" for a, b in covers))
    out.text(f"ideals: {len(ideals(E))}")
    out.text(f"exocenter size: {len(X)}")
    out.text(f"center: {fmt_set(E, Gamma)}")
    out.text(f"atoms: {fmt_set(E, atoms(E))}")
    out.record(
        "info", n=E.n, sums=E.sum_count(), pea=is_pea(E),
        top=E.name(top) if top is not None else None,
        commutative=is_commutative(E), ideals=len(ideals(E)), exocenter=len(X),
        center=[E.name(c) for c in sorted(Gamma)], atoms=[E.name(a) for a in sorted(atoms(E))],
    )
    for a, b in covers:
        out.record("hasse", lower=E.name(a), upper=E.name(b))
    return EXIT_OK


def cmd_exocenter(args, out):
    E = load_model(args.file)
    X = exocenter(E)
    out.text(f"exocenter: {len(X)} maps")
    for i, p in enumerate(X):
        vals = " ".join(E.name(v) for v in p.values)
        out.text(f"  [{i}] {fmt_map(p):<12} values {vals}")
        out.record("exomap", index=i, image=[E.name(a) for a in sorted(p.image)],
                   values=[E.name(v) for v in p.values])
    return EXIT_OK


def cmd_center(args, out):
    E = load_model(args.file)
    Gamma = sorted(central_elements(E))
    u = center_unit(E)
    F1, F2 = centerless_split(E)
    out.text(f"center: {fmt_set(E, Gamma)}")
    out.text(f"unit: {E.name(u)}")
    out.text(f"centerless split: {F1.n} + {F2.n} elements")
    out.record("center", elements=[E.name(c) for c in Gamma], unit=E.name(u),
               split=(F1.n, F2.n))
    for c in Gamma:
        p = pi_c(E, c)
        out.text(f"  pi_{E.name(c)} = {fmt_map(p)}")
        out.record("central", element=E.name(c), image=[E.name(a) for a in sorted(p.image)])
    return EXIT_OK


def cmd_covers(args, out):
    E = load_model(args.file)
    cs = cover_system(E)
    ok, cert = is_cogpea(E)
    for e in range(E.n):
        out.text(f"gamma_{E.name(e)} = {fmt_map(cs.gamma[e])}")
        out.record("cover", element=E.name(e), image=[E.name(a) for a in sorted(cs.gamma[e].image)])
    out.text(f"distinct covers: {len(cs.theta)}")
    out.text(f"cogpea: {'yes' if ok else 'no'} ({len(cert.families)} families, {len(cert.maximal)} maximal)")
    for fam in cert.maximal:
        out.text(f"  maximal family {fmt_set(E, fam)}")
    out.record("cogpea", ok=ok, families=len(cert.families), maximal=len(cert.maximal),
               theta=len(cs.theta))
    for tag, fam, e in cert.failures:
        out.text(f"  failure {tag} {fmt_set(E, fam)} at {e}")
        out.record("cogpea_failure", tag=tag, family=list(fam), element=e)
    return EXIT_OK if ok else EXIT_LAWS


CLOSURES = {
    "gamma": closure_gamma,
    "image": gamma_image,
    "down": downset,
    "prime": disjoint_complement,
    "doubleprime": double_complement,
}


def cmd_tdclose(args, out):
    E = load_model(args.file)
    Q = parse_set(E, args.Q)
    R = CLOSURES[args.op](E, Q)
    out.text(f"{args.op}({fmt_set(E, Q)}) = {fmt_set(E, R)}")
    out.record("tdclose", op=args.op, Q=[E.name(a) for a in sorted(Q)],
               result=[E.name(a) for a in sorted(R)], td=is_td(E, R))
    return EXIT_OK


def _td_arg(E, spec, name, close, out):
    S = parse_set(E, spec)
    if is_td(E, S):
        return S
    if not close:
        raise UsageError(f"{name}={fmt_set(E, S)} is not a TD set (use --close)")
    T = td_generated(E, S)
    out.text(f"note: {name}={fmt_set(E, S)} is not a TD set; using td_generated = {fmt_set(E, T)}")
    out.record("closed", set=name, given=[E.name(a) for a in sorted(S)],
               generated=[E.name(a) for a in sorted(T)])
    return T


def cmd_decompose(args, out):
    E = load_model(args.file)
    K = _td_arg(E, args.K, "K", args.close, out)
    F = _td_arg(E, args.F, "F", args.close, out) if args.F else None
    if F is not None and not K <= F:
        raise UsageError("K must be contained in F")
    ctx = td_context(E, K)
    name = E.name
    out.text(f"K = {fmt_set(E, ctx.K)}   K~ = {fmt_set(E, ctx.K_tilde)}")
    out.text(f"k* = {name(ctx.k_star)}   k~ = {name(ctx.k_tilde)}")
    out.text(f"gamma_K = {fmt_map(ctx.gamma_K)}   gamma_K~ = {fmt_map(ctx.gamma_K_tilde)}")
    out.record("context", K=[name(a) for a in sorted(ctx.K)], K_tilde=[name(a) for a in sorted(ctx.K_tilde)],
               k_star=name(ctx.k_star), k_tilde=name(ctx.k_tilde),
               gamma_K=fmt_map(ctx.gamma_K), gamma_K_tilde=fmt_map(ctx.gamma_K_tilde))
    triple = fundamental_decomposition(ctx)
    out.text("fundamental triple = (" + ",".join(fmt_map(p) for p in triple) + ")")
    out.record("fundamental", triple=[fmt_map(p) for p in triple])
    out.text("type flags (type-K, locally type-K, purely non-K, properly non-K):")
    for i, p in enumerate(exocenter(E)):
        f = classify(ctx, p)
        marks = "".join("x" if v else "." for v in (f.type_K, f.locally_type_K, f.purely_non_K, f.properly_non_K))
        out.text(f"  {fmt_map(p):<14} {marks}")
        out.record("flags", index=i, map=fmt_map(p), type_K=f.type_K, locally_type_K=f.locally_type_K,
                   purely_non_K=f.purely_non_K, properly_non_K=f.properly_non_K)
    if F is not None:
        rep = type_I_II_III(E, K, F)
        parts = ("piI", "piII", "piIII", "piIF", "piInotF", "piIIF", "piIInotF")
        out.text("I/II/III: " + "  ".join(f"{k}={fmt_map(getattr(rep, k))}" for k in parts))
        out.record("decomposition", F=[name(a) for a in sorted(rep.ctx_F.K)],
                   **{k: fmt_map(getattr(rep, k)) for k in parts})
        for i, p in enumerate(exocenter(E)):
            flags = type_I_flags(rep, p)
            out.record("typeclass", index=i, map=fmt_map(p), **{k: v for k, v in sorted(flags.items())})
    return EXIT_OK


def cmd_enumerate(args, out):
    models = enumerate_gpeas(args.order, cap=args.cap)
    out.text(f"# {len(models)} isomorphism classes of order {args.order}")
    out.record("enumerate", order=args.order, classes=len(models))
    for i, E in enumerate(models):
        out.text(f"# class {i}")
        for line in serialize_model(E).splitlines():
            out.text(line)
        sums = [f"{a}+{b}={E.table[a][b]}" for a in range(1, E.n) for b in range(1, E.n)
                if E.table[a][b] is not None]
        out.record("model", index=i, n=E.n, sums=sums)
    return EXIT_OK


@contextmanager
def _time_limit(seconds: float):
    if not seconds or not hasattr(signal, "setitimer"):
        yield
        return

    def fire(signum, frame):
        raise TimeoutError

    old = signal.signal(signal.SIGALRM, fire)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


def cmd_laws(args, out):
    from gpea.corpus import corpus
    from gpea.laws import LawResult, law_ids, verify_laws

    if (args.file is None) == (args.corpus is None):
        raise UsageError("give exactly one of a model file or --corpus n")
    selection = None
    if args.law:
        selection = [w for part in args.law for w in part.split(",") if w]
        known = set(law_ids())
        bad = [w for w in selection if w not in known]
        if bad:
            raise UsageError(f"unknown law ids: {', '.join(bad)}")
    if args.corpus is not None:
        if not 1 <= args.corpus <= args.cap:
            raise UsageError(f"corpus order must be in 1..{args.cap}")
        models = corpus(args.corpus)
    else:
        models = [(args.file, load_model(args.file))]

    counts = {"pass": 0, "fail": 0, "skip": 0, "timeout": 0}
    ids = selection or law_ids()
    for mid, E in models:
        t0 = time.perf_counter()
        results = []
        for lid in ids:
            try:
                with _time_limit(args.timeout):
                    results += verify_laws(E, [lid], mid)
            except TimeoutError:
                results.append(LawResult(lid, mid, "timeout", f"exceeded {args.timeout}s"))
        for r in results:
            counts[r.status] += 1
            out.record("law", model=mid, law=r.law, status=r.status)
            if r.status in ("fail", "timeout"):
                out.text(f"FAIL {mid} {r.law}: {r.witness}")
                out.record("witness", model=mid, law=r.law, detail=repr(r.witness))
        elapsed = "" if args.seedless else f" in {time.perf_counter() - t0:.2f}s"
        n_bad = sum(r.status in ("fail", "timeout") for r in results)
        out.text(f"{mid}: {len(results) - n_bad}/{len(results)} ok{elapsed}")
    bad = counts["fail"] + counts["timeout"]
    out.text(f"summary: {len(models)} models, {len(ids)} laws, "
             f"{counts['pass']} pass, {counts['fail']} fail, {counts['skip']} skip, {counts['timeout']} timeout")
    out.record("summary", models=len(models), laws=len(ids), **counts)
    return EXIT_LAWS if bad else EXIT_OK


# argument parsing -------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _globals(p, top: bool):
    default = "text" if top else argparse.SUPPRESS
    p.add_argument("--format", choices=("text", "machine"), default=default,
                   help="report format (default text)")
    p.add_argument("--seedless", action="store_true", default=False if top else argparse.SUPPRESS,
                   help="omit timings and other run-dependent output")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gpea", description="Finite generalized pseudoeffect algebra toolkit.")
    _globals(parser, True)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, required=True)

    def add(name, func, help, file=True):
        p = sub.add_parser(name, help=help)
        _globals(p, False)
        if file:
            p.add_argument("file")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check the GPEA axioms")
    add("info", cmd_info, "order, ideals, center and exocenter sizes")
    add("exocenter", cmd_exocenter, "list the exocenter maps")
    add("center", cmd_center, "central elements, their projections and the center unit")
    add("covers", cmd_covers, "exocentral covers and the COGPEA certificate")
    p = add("tdclose", cmd_tdclose, "apply a closure operator to a set")
    p.add_argument("--Q", required=True, help="set spec")
    p.add_argument("--op", required=True, choices=tuple(CLOSURES))
    p = add("decompose", cmd_decompose, "type flags and the I/II/III decomposition")
    p.add_argument("--K", required=True, help="set spec for K")
    p.add_argument("--F", help="set spec for F (K must be a subset)")
    p.add_argument("--close", action="store_true", help="replace non-TD sets by the TD set they generate")
    p = add("enumerate", cmd_enumerate, "all isomorphism classes of a given order", file=False)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_ORDER_CAP, help="largest order allowed")
    p = add("laws", cmd_laws, "run the law suite", file=False)
    p.add_argument("file", nargs="?")
    p.add_argument("--corpus", type=int, help="enumerated classes up to this order plus the built-in models")
    p.add_argument("--law", action="append", help="comma-separated law ids (repeatable)")
    p.add_argument("--cap", type=int, default=DEFAULT_ORDER_CAP, help="largest corpus order allowed")
    p.add_argument("--timeout", type=float, default=0, help="per-law time limit in seconds (0 disables)")
    return parser


def run(argv: Optional[list] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        stderr.write(f"gpea: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    out = Out(args.format == "machine")
    try:
        code = args.func(args, out)
    except InvalidModelError as exc:
        out.emit(stdout)
        stderr.write(f"gpea: invalid model: {exc.report}\n")
        for tag, w in exc.report.violations:
            out.record("violation", tag=tag, witness=list(w))
        out.emit(stdout)
        return EXIT_INVALID
    except ModelSyntaxError as exc:
        out.emit(stdout)
        stderr.write(f"gpea: invalid model: {exc}\n")
        out.record("syntax_error", line=exc.line)
        out.emit(stdout)
        return EXIT_INVALID
    except (UsageError, DomainError) as exc:
        out.emit(stdout)
        stderr.write(f"gpea: {exc}\n")
        return EXIT_USAGE
    except GpeaError as exc:
        out.emit(stdout)
        stderr.write(f"gpea: {exc}\n")
        return EXIT_USAGE
    out.emit(stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
