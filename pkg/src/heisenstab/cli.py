"""Command-line front end: exact coefficients, stabilization scans,
stability reports, additivity certificates, and matrix enumeration.

JSON goes to stdout, diagnostics to stderr.  Exit codes: 0 success,
2 parse error, 3 size-pattern error, 4 engine mismatch or cache integrity
failure, 5 enumeration budget exceeded, 1 selftest failure.

A persistent cache of coefficient values lives in a single append-friendly
text file (one JSON record per line) at ~/.cache/heisenstab.cache, or
wherever HEIS_CACHE points.  The cache is an accelerator only: corrupt
lines are skipped with a warning, and any disagreement between a cached
primary value and a cached oracle value for the same query is a fatal
integrity error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Optional

from .additivity import (
    BudgetExceededError,
    HeisenbergMatrix,
    MatrixParseError,
    build_constraint_matrix,
    check_budget,
    check_certificate,
    flatten,
    heisenberg_class,
    heisenberg_matrices,
    heisenberg_stable_triple,
    is_heisenberg_additive,
    is_kronecker_additive,
    kronecker_class,
    kronecker_matrices,
    kronecker_stable_triple,
    parse_matrix,
    AdditivityCertificate,
)
from .coefficients import (
    heisenberg_coeff,
    heisenberg_coeff_oracle,
    kron_coeff,
    kron_coeff_oracle,
    lr_coeff,
    lr_coeff_hive,
)
from .partitions import Composition, NotAPartitionError, Partition
from .stability import (
    Kind,
    NotATripleError,
    classify_triple,
    detect_stable_limit,
    stability_check,
    stabilization_sequence,
)

EXIT_OK = 0
EXIT_SELFTEST = 1
EXIT_PARSE = 2
EXIT_SIZES = 3
EXIT_MISMATCH = 4
EXIT_BUDGET = 5


def _warn(msg: str) -> None:
    print(f"heisenstab: {msg}", file=sys.stderr)


class CacheIntegrityError(RuntimeError):
    pass


def cache_path() -> str:
    env = os.environ.get("HEIS_CACHE")
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "heisenstab.cache")


def load_cache(path: str) -> dict[tuple[str, str], int]:
    records: dict[tuple[str, str], int] = {}
    try:
        fh = open(path, "r", encoding="utf-8")
    except OSError:
        return records
    with fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
                q, engine, value = rec["q"], rec["engine"], int(rec["value"])
                if engine not in ("primary", "oracle"):
                    raise ValueError(engine)
            except (ValueError, KeyError, TypeError):
                _warn(f"skipping corrupt cache line {lineno}")
                continue
            key = (q, engine)
            if key in records and records[key] != value:
                raise CacheIntegrityError(
                    f"cache holds conflicting values for {q} [{engine}]: "
                    f"{records[key]} vs {value}")
            records[key] = value
    for (q, engine), value in records.items():
        other = records.get((q, "oracle" if engine == "primary" else "primary"))
        if other is not None and other != value:
            raise CacheIntegrityError(
                f"primary and oracle records disagree for {q}: {value} vs {other}")
    return records


def append_cache(path: str, q: str, engine: str, value: int) -> None:
    try:
        os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
        with open(path, "a", encoding="utf-8") as fh:
            try:
                import fcntl

                fcntl.flock(fh, fcntl.LOCK_EX)
            except (ImportError, OSError):
                pass  # advisory only; losing a write is acceptable
            fh.write(json.dumps({"q": q, "engine": engine, "value": value}) + "\n")
    except OSError as exc:
        _warn(f"cache write failed: {exc}")


def _emit(obj) -> None:
    print(json.dumps(obj))


def _parse_partition(text: str) -> Partition:
    return Partition.parse(text)


def _query_text(kind: str, lam: Partition, mu: Partition, nu: Partition) -> str:
    return f"{kind} {lam} {mu} {nu}"


_PRIMARY = {
    "lr": lr_coeff,
    "kron": kron_coeff,
    "heis": heisenberg_coeff,
}
_ORACLE = {
    "lr": lr_coeff_hive,
    "kron": kron_coeff_oracle,
    "heis": heisenberg_coeff_oracle,
}


def _sizes_ok(kind: str, lam: Partition, mu: Partition, nu: Partition) -> bool:
    if kind == "lr":
        return lam.size == mu.size + nu.size
    if kind == "kron":
        return lam.size == mu.size == nu.size
    return max(mu.size, nu.size) <= lam.size <= mu.size + nu.size


def cmd_coeff(args) -> int:
    try:
        lam = _parse_partition(args.lam)
        mu = _parse_partition(args.mu)
        nu = _parse_partition(args.nu)
    except NotAPartitionError as exc:
        _warn(str(exc))
        return EXIT_PARSE
    if not _sizes_ok(args.kind, lam, mu, nu):
        _warn(f"sizes ({lam.size}; {mu.size}, {nu.size}) do not fit kind {args.kind}")
        return EXIT_SIZES
    path = cache_path()
    try:
        cache = load_cache(path)
    except CacheIntegrityError as exc:
        _warn(str(exc))
        return EXIT_MISMATCH
    q = _query_text(args.kind, lam, mu, nu)

    def run(engine: str) -> int:
        key = (q, engine)
        if key in cache:
            return cache[key]
        fn = (_PRIMARY if engine == "primary" else _ORACLE)[args.kind]
        value = fn(lam, mu, nu)
        append_cache(path, q, engine, value)
        return value

    t0 = time.perf_counter()
    value = run("primary")
    engine = "primary"
    if args.oracle:
        oracle_value = run("oracle")
        if oracle_value != value:
            _warn(f"engine mismatch on {q}: primary={value} oracle={oracle_value}")
            return EXIT_MISMATCH
        engine = "both"
    elapsed_ms = (time.perf_counter() - t0) * 1000.0
    _emit({"kind": args.kind, "lambda": str(lam), "mu": str(mu), "nu": str(nu),
           "value": value, "engine": engine, "elapsed_ms": round(elapsed_ms, 3)})
    return EXIT_OK


def cmd_seq(args) -> int:
    try:
        base = tuple(_parse_partition(t) for t in (args.lam, args.mu, args.nu))
        direction = tuple(_parse_partition(t) for t in (args.alpha, args.beta, args.gamma))
    except NotAPartitionError as exc:
        _warn(str(exc))
        return EXIT_PARSE
    kind = Kind.from_token(args.kind)
    try:
        seq = stabilization_sequence(kind, base, direction, range(0, args.n + 1))
    except ValueError as exc:
        _warn(str(exc))
        return EXIT_SIZES
    values = [v for _, v in seq]
    hit = detect_stable_limit(values, window=args.window)
    out = {
        "kind": args.kind,
        "base": {"lambda": str(base[0]), "mu": str(base[1]), "nu": str(base[2])},
        "direction": {"alpha": str(direction[0]), "beta": str(direction[1]),
                      "gamma": str(direction[2])},
        "sequence": [[n, v] for n, v in seq],
        "verdict": "constant_tail" if hit else "no_tail_detected",
    }
    if hit:
        out["limit"], out["onset"] = hit
    _emit(out)
    return EXIT_OK


def cmd_stable(args) -> int:
    try:
        alpha = _parse_partition(args.alpha)
        beta = _parse_partition(args.beta)
        gamma = _parse_partition(args.gamma)
    except NotAPartitionError as exc:
        _warn(str(exc))
        return EXIT_PARSE
    try:
        triple = classify_triple(alpha, beta, gamma)
    except NotATripleError as exc:
        _warn(f"not a triple ({exc.reason}): {exc}")
        return EXIT_SIZES
    report = stability_check(triple, n_max=args.n_max)
    out = {
        "alpha": str(alpha), "beta": str(beta), "gamma": str(gamma),
        "kind": triple.kind.value,
        "flags": sorted(k.value for k in triple.flags),
        "coefficient": triple.coefficient,
        "verdict": report.verdict.value,
        "n_max": report.n_max,
        "sequence": [[n, v] for n, v in report.sequence],
    }
    if report.witness is not None:
        out["witness_n"], out["witness_value"] = report.witness
    if report.certified_by:
        out["certified_by"] = report.certified_by
    _emit(out)
    return EXIT_OK


def _certificate_json(cert: AdditivityCertificate) -> dict:
    return {"x": [str(v) for v in cert.x], "y": [str(v) for v in cert.y]}


def cmd_additive(args) -> int:
    try:
        with open(args.matrix, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        _warn(f"cannot read matrix file: {exc}")
        return EXIT_PARSE
    try:
        A = parse_matrix(text, args.kind)
    except MatrixParseError as exc:
        _warn(f"bad matrix: {exc}")
        return EXIT_PARSE
    if args.kind == "h":
        result = heisenberg_stable_triple(A)
    else:
        if A.row_margins.size != A.col_margins.size:
            cert = is_kronecker_additive(A)
            out = {"kind": args.kind, "additive": cert is not None}
            if cert is not None:
                out["certificate"] = _certificate_json(cert)
                _warn("margins have different totals: no triple emitted")
            _emit(out)
            return EXIT_OK
        result = kronecker_stable_triple(A)
    out = {"kind": args.kind, "additive": result is not None}
    if result is not None:
        out["certificate"] = _certificate_json(result.certificate)
        out["triple"] = {
            "alpha": str(result.alpha),
            "beta": ",".join(map(str, result.beta)) or "0",
            "gamma": ",".join(map(str, result.gamma)) or "0",
        }
    _emit(out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    try:
        beta = Composition.parse(args.rows)
        gamma = Composition.parse(args.cols)
        pi = _parse_partition(args.pi) if args.pi is not None else None
    except (NotAPartitionError, ValueError) as exc:
        _warn(str(exc))
        return EXIT_PARSE
    try:
        check_budget(beta, gamma, cornered=(args.kind == "h"))
    except BudgetExceededError as exc:
        _warn(str(exc))
        return EXIT_BUDGET
    if args.kind == "h":
        stream = heisenberg_class(beta, gamma, pi) if pi is not None else heisenberg_matrices(beta, gamma)
    else:
        stream = kronecker_class(beta, gamma, pi) if pi is not None else kronecker_matrices(beta, gamma)
    count = 0
    for A in stream:
        print(A.to_text())
        print()
        count += 1
    _emit({"count": count})
    return EXIT_OK


def cmd_selftest(args) -> int:
    from fractions import Fraction as F

    worked = HeisenbergMatrix([(0, 4, 6, 1), (4, 5, 7, 2), (2, 3, 5, 0)])
    reference = AdditivityCertificate(
        x=(F(0), F(1), F(-1)), y=(F(0), F(1), F(3), F(-2)))

    checks = []

    def check(name, fn):
        try:
            ok = bool(fn())
        except Exception as exc:  # a selftest must never crash the table
            ok = False
            _warn(f"{name}: {exc}")
        checks.append((name, ok))

    check("sorted entries of the worked margin matrix",
          lambda: worked.pi == (7, 6, 5, 5, 4, 4, 3, 2, 2, 1))
    check("worked matrix margins",
          lambda: worked.row_margins == (18, 10) and worked.col_margins == (12, 18, 3))
    check("flatten order on the worked matrix",
          lambda: flatten(worked) == (4, 6, 1, 4, 5, 7, 2, 2, 3, 5, 0))
    check("reference potentials validate",
          lambda: check_certificate(worked, reference))
    check("solver certifies the worked matrix",
          lambda: is_heisenberg_additive(worked) is not None)
    check("certified triple of the worked matrix",
          lambda: (lambda t: t is not None and
                   (t.alpha, tuple(t.beta), tuple(t.gamma)) ==
                   ((7, 6, 5, 5, 4, 4, 3, 2, 2, 1), (18, 10), (12, 18, 3)))(
                       heisenberg_stable_triple(worked)))
    check("margin constraint matrix (2,3), bit-exact",
          lambda: build_constraint_matrix(2, 3).rows == (
              (0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0),
              (0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1),
              (1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0),
              (0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0),
              (0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1)))
    check("unit split coefficient c[(2,2,1); (2,1),(2)] = 1",
          lambda: lr_coeff((2, 2, 1), (2, 1), (2,)) == 1)
    check("kostka positivity boundary K[(1,1),(2)] = 0",
          lambda: __import__("heisenstab").kostka((1, 1), (2,)) == 0)
    check("unit diagonal kostka K[(2,1),(2,1)] = 1",
          lambda: __import__("heisenstab").kostka((2, 1), (2, 1)) == 1)
    check("classical stable direction scan: g stays 1 up to n=6",
          lambda: all(kron_coeff((n,), (n,), (n,)) == 1 for n in range(1, 7)))
    check("scaled values grow on a refuted split triple",
          lambda: all(
              lr_coeff(tuple(n * x for x in (3, 2, 1)),
                       tuple(n * x for x in (2, 1)),
                       tuple(n * x for x in (2, 1))) >= n + 1
              for n in range(1, 4)))

    width = max(len(name) for name, _ in checks)
    failures = 0
    for name, ok in checks:
        print(f"{'PASS' if ok else 'FAIL'}  {name:<{width}}")
        failures += 0 if ok else 1
    print(f"{len(checks) - failures}/{len(checks)} conformance checks passed")
    return EXIT_OK if failures == 0 else EXIT_SELFTEST


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="heisenstab",
        description="Exact structure constants and stability of partition triples.")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("coeff", help="one coefficient value")
    c.add_argument("kind", choices=["lr", "kron", "heis"])
    c.add_argument("lam", metavar="lambda")
    c.add_argument("mu")
    c.add_argument("nu")
    c.add_argument("--oracle", action="store_true",
                   help="run the independent second engine and compare")
    c.set_defaults(fn=cmd_coeff)

    s = sub.add_parser("seq", help="stabilization sequence along a direction")
    s.add_argument("kind", choices=["lr", "kron", "heis"])
    s.add_argument("lam", metavar="lambda")
    s.add_argument("mu")
    s.add_argument("nu")
    s.add_argument("alpha")
    s.add_argument("beta")
    s.add_argument("gamma")
    s.add_argument("--n", type=int, default=8, help="scan n = 0..N (default 8)")
    s.add_argument("--window", type=int, default=4,
                   help="tail window for the heuristic limit (default 4)")
    s.set_defaults(fn=cmd_seq)

    st = sub.add_parser("stable", help="stability report for a triple")
    st.add_argument("alpha")
    st.add_argument("beta")
    st.add_argument("gamma")
    st.add_argument("--n-max", type=int, default=8, dest="n_max")
    st.set_defaults(fn=cmd_stable)

    ad = sub.add_parser("additive", help="additivity certificate for a matrix file")
    ad.add_argument("--matrix", required=True, help="text file, one row per line")
    ad.add_argument("--kind", choices=["k", "h"], required=True)
    ad.set_defaults(fn=cmd_additive)

    en = sub.add_parser("enumerate", help="stream all matrices with given margins")
    en.add_argument("--rows", required=True, help="row margins, comma-separated")
    en.add_argument("--cols", required=True, help="column margins, comma-separated")
    en.add_argument("--kind", choices=["k", "h"], required=True)
    en.add_argument("--pi", default=None,
                    help="restrict to matrices with this sorted entry sequence")
    en.set_defaults(fn=cmd_enumerate)

    se = sub.add_parser("selftest", help="run the conformance table")
    se.set_defaults(fn=cmd_selftest)
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
