"""Parsing intersection arrays and batch tables; rendering verdicts."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .feasibility import Verdict, run_nonexistence_chain
from .model import IntersectionArray
from .spectral import AlgebraicNumber, format_exact
from .spectral import polynomial as P

FORMATS = ("text", "json", "csv")


class ArrayParseError(ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


def _parse_list(text: str, start: int, name: str) -> list[int]:
    if not text.strip():
        raise ArrayParseError(f"empty {name}-list", start)
    out = []
    pos = start
    for token in text.split(","):
        stripped = token.strip()
        at = pos + (len(token) - len(token.lstrip()))
        if not stripped.isdigit() or not stripped.isascii():
            raise ArrayParseError(f"non-numeric token {stripped!r} in {name}-list", at)
        value = int(stripped)
        if value < 1:
            raise ArrayParseError(f"entry {value} in {name}-list is not positive", at)
        out.append(value)
        pos += len(token) + 1
    return out


def parse_array(text: str) -> IntersectionArray:
    """Parse brace notation ``{b_0,...,b_{d-1};c_1,...,c_d}``."""
    body = text.strip()
    offset = len(text) - len(text.lstrip())
    if not body.startswith("{"):
        raise ArrayParseError("expected '{'", offset)
    if not body.endswith("}"):
        raise ArrayParseError("expected '}'", offset + len(body))
    inner = body[1:-1]
    if inner.count(";") != 1:
        raise ArrayParseError("expected exactly one ';' separating b- and c-lists", offset + 1)
    b_text, c_text = inner.split(";")
    b = _parse_list(b_text, offset + 1, "b")
    c_start = offset + 2 + len(b_text)
    c = _parse_list(c_text, c_start, "c")
    if len(b) != len(c):
        raise ArrayParseError(f"b-list length {len(b)} != c-list length {len(c)}", c_start)
    if c[0] != 1:
        raise ArrayParseError(f"c_1 must be 1, got {c[0]}", c_start)
    return IntersectionArray(tuple(b), tuple(c))


def format_array(arr: IntersectionArray) -> str:
    return str(arr)


def parse_csv_row(fields: Sequence[str]) -> IntersectionArray:
    """Row ``d, b_0..b_{d-1}, c_1..c_d``."""
    try:
        values = [int(f.strip()) for f in fields]
    except ValueError:
        raise ValueError(f"non-numeric field in csv row {list(fields)}") from None
    if not values:
        raise ValueError("empty csv row")
    d = values[0]
    if d < 1 or len(values) != 1 + 2 * d:
        raise ValueError(f"csv row declares d = {d} but has {len(values) - 1} entries")
    if min(values[1:]) < 1:
        raise ValueError("csv entries must be positive")
    if values[1 + d] != 1:
        raise ValueError(f"c_1 must be 1, got {values[1 + d]}")
    return IntersectionArray(tuple(values[1:1 + d]), tuple(values[1 + d:]))


@dataclass(frozen=True)
class BatchRecord:
    line_number: int
    raw: str
    parsed: Optional[IntersectionArray] = None
    parse_error: Optional[str] = None

    def __post_init__(self) -> None:
        if (self.parsed is None) == (self.parse_error is None):
            raise ValueError("exactly one of parsed / parse_error must be set")


@dataclass(frozen=True)
class BatchError:
    line_number: int
    raw: str
    message: str


def read_batch(text: str, fmt: str = "text") -> list[BatchRecord]:
    """Records from a batch table; blank lines and ``#`` comments are skipped."""
    if fmt not in ("text", "csv"):
        raise ValueError(f"unknown batch format {fmt!r}")
    records = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        raw = line.strip()
        if not raw or raw.startswith("#"):
            continue
        try:
            if fmt == "csv":
                fields = next(csv.reader([raw]))
                if fields and fields[0].strip().lower() == "d":
                    continue
                arr = parse_csv_row(fields)
            else:
                arr = parse_array(raw)
        except ValueError as exc:
            records.append(BatchRecord(lineno, raw, parse_error=str(exc)))
        else:
            records.append(BatchRecord(lineno, raw, parsed=arr))
    return records


def scan_batch(records: Iterable[BatchRecord], workers: int = 1) -> list[Union[Verdict, BatchError]]:
    """Run the chain on every parsed record; output order follows input order."""
    records = list(records)
    arrays = [r.parsed for r in records if r.parsed is not None]
    if workers > 1 and len(arrays) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            verdicts = iter(pool.map(run_nonexistence_chain, arrays, chunksize=32))
    else:
        verdicts = iter(map(run_nonexistence_chain, arrays))
    out: list[Union[Verdict, BatchError]] = []
    for r in records:
        if r.parsed is None:
            out.append(BatchError(r.line_number, r.raw, r.parse_error))
        else:
            out.append(next(verdicts))
    return out


# --- rendering ----------------------------------------------------------------


def _value(x) -> Union[str, list]:
    if isinstance(x, (tuple, list)):
        return [_value(y) for y in x]
    return format_exact(x)


def _eigen_entry(theta, m) -> dict:
    if isinstance(theta, AlgebraicNumber):
        value, poly = theta.interval_string(), P.to_string(theta.minimal_polynomial())
    else:
        value, poly = format_exact(theta), None
    return {"value": value, "polynomial": poly, "multiplicity": format_exact(m)}


def verdict_to_dict(v: Union[Verdict, BatchError]) -> dict:
    if isinstance(v, BatchError):
        return {
            "array": v.raw, "d": None, "n": None, "valencies": None, "a_sequence": None,
            "spectrum": None, "verdict": "parse-error", "killer": None, "trace": None,
            "error": f"line {v.line_number}: {v.message}",
        }
    dp, sp = v.derived, v.spectrum
    killer = None
    if v.killer is not None:
        killer = {"index": v.killer, "condition": v.trace[v.killer].condition.value}
    return {
        "array": str(v.array),
        "d": v.array.d,
        "n": format_exact(dp.n),
        "valencies": [format_exact(k) for k in dp.k],
        "a_sequence": list(dp.a),
        "spectrum": [_eigen_entry(t, m) for t, m in zip(sp.eigenvalues, sp.multiplicities)],
        "verdict": v.status,
        "killer": killer,
        "trace": [
            {
                "condition": s.condition.value,
                "inputs": {k: _value(x) for k, x in s.inputs.items()},
                "outcome": s.outcome.value,
                "detail": s.detail,
            }
            for s in v.trace
        ],
        "error": None,
    }


def _text_block(v: Union[Verdict, BatchError]) -> str:
    if isinstance(v, BatchError):
        return f"line {v.line_number}: parse error: {v.message}\n  input: {v.raw}\n"
    dp, sp = v.derived, v.spectrum

    def join(xs):
        return ", ".join(format_exact(x) for x in xs)

    lines = [
        f"intersection array {v.array}: diameter {v.array.d}, {format_exact(dp.n)} vertices",
        f"valencies: {join(dp.k)}",
        f"a-sequence: {join(dp.a)}",
        f"eigenvalues: {join(sp.eigenvalues)}",
        f"multiplicities: {join(sp.multiplicities)}",
    ]
    for s in v.trace:
        lines.append(f"  [{s.outcome.value}] {s.detail}")
    if v.infeasible:
        lines.append(f"verdict: INFEASIBLE (killed by {v.killer_step.condition.value})")
    else:
        lines.append("verdict: INCONCLUSIVE")
    return "\n".join(lines) + "\n"


def render_report(verdicts: Sequence[Union[Verdict, BatchError]], fmt: str = "text") -> bytes:
    if fmt == "text":
        return "\n".join(_text_block(v) for v in verdicts).encode()
    if fmt == "json":
        return (json.dumps([verdict_to_dict(v) for v in verdicts], indent=2) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["array", "n", "verdict", "killer_condition"])
        for v in verdicts:
            if isinstance(v, BatchError):
                w.writerow([v.raw, "", "parse-error", ""])
            else:
                killer = v.killer_step.condition.value if v.infeasible else ""
                w.writerow([str(v.array), format_exact(v.derived.n), v.status, killer])
        return buf.getvalue().encode()
    raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


def read_json_report(data: Union[str, bytes]) -> list[tuple[str, str, Optional[int], Optional[str]]]:
    """(array, verdict, killer index, killer condition) for each entry of a json report."""
    out = []
    for obj in json.loads(data):
        killer = obj["killer"]
        out.append((obj["array"], obj["verdict"],
                    None if killer is None else killer["index"],
                    None if killer is None else killer["condition"]))
    return out
