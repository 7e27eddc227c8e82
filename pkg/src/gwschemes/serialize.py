"""Scheme files and scalar text forms.

A scheme file is JSON: version, point count, class labels, the label matrix
rows run-length encoded as [label_index, count, label_index, count, ...], and
an optional provenance record describing how the scheme was built.  Loading
re-verifies the axioms from scratch, so a loaded AssociationScheme is as
trustworthy as a freshly constructed one.

Scalars print as polynomials in z = zeta_M with an optional radical part,
e.g. "1/2 + 3*z^2 + r*(1 - z)" where r = sqrt(d); scalar_from_str parses the
same form back given the field.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction

import numpy as np

from .algebra import CycField, CycScalar
from .schemes import AssociationScheme, scheme_verify

FILE_VERSION = 1


def scheme_to_dict(scheme: AssociationScheme, provenance: dict | None = None) -> dict:
    L = np.zeros((scheme.v, scheme.v), dtype=np.int64)
    for i, M in enumerate(scheme.mats):
        L += i * M
    rows = []
    for x in range(scheme.v):
        row = L[x]
        rle: list[int] = []
        start = 0
        for y in range(1, scheme.v + 1):
            if y == scheme.v or row[y] != row[start]:
                rle.extend([int(row[start]), y - start])
                start = y
        rows.append(rle)
    out = {
        "version": FILE_VERSION,
        "v": scheme.v,
        "labels": list(scheme.labels),
        "rows": rows,
    }
    if provenance is not None:
        out["provenance"] = provenance
    return out


def scheme_from_dict(data: dict) -> tuple[AssociationScheme, dict | None]:
    if data.get("version") != FILE_VERSION:
        raise ValueError(f"unsupported file version {data.get('version')!r}")
    v = data["v"]
    labels = data["labels"]
    L = np.zeros((v, v), dtype=np.int64)
    for x, rle in enumerate(data["rows"]):
        y = 0
        for t in range(0, len(rle), 2):
            lbl, count = rle[t], rle[t + 1]
            L[x, y : y + count] = lbl
            y += count
        if y != v:
            raise ValueError(f"row {x} does not cover all columns")
    mats = [(L == i).astype(np.int64) for i in range(len(labels))]
    return scheme_verify(mats, labels), data.get("provenance")


def save_scheme(path, scheme: AssociationScheme, provenance: dict | None = None) -> None:
    with open(path, "w") as fh:
        json.dump(scheme_to_dict(scheme, provenance), fh)
        fh.write("\n")


def load_scheme(path) -> tuple[AssociationScheme, dict | None]:
    with open(path) as fh:
        return scheme_from_dict(json.load(fh))


# -- scalar text form --


def _frac_str(fr: Fraction) -> str:
    return str(fr.numerator) if fr.denominator == 1 else f"{fr.numerator}/{fr.denominator}"


def _poly_str(coeffs: list[Fraction]) -> str:
    terms = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        if k == 0:
            terms.append(_frac_str(c))
            continue
        zpow = "z" if k == 1 else f"z^{k}"
        if c == 1:
            terms.append(zpow)
        elif c == -1:
            terms.append(f"-{zpow}")
        else:
            terms.append(f"{_frac_str(c)}*{zpow}")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


def scalar_to_str(s: CycScalar) -> str:
    a = _poly_str(s.a_vector())
    b = _poly_str(s.b_vector())
    if b == "0":
        return a
    if a == "0":
        return f"r*({b})"
    return f"{a} + r*({b})"


_TERM = re.compile(
    r"^\s*(?P<sign>[+-]?)\s*(?:(?P<num>\d+)(?:/(?P<den>\d+))?\s*(?:\*\s*)?)?"
    r"(?:z(?:\^(?P<pow>\d+))?)?\s*$"
)


def _poly_parse(field: CycField, text: str) -> list[Fraction]:
    coeffs = [Fraction(0)] * field.deg
    text = text.strip()
    if text == "0":
        return coeffs
    # split into signed terms
    parts = re.split(r"(?=[+-])", text.replace(" ", ""))
    for part in parts:
        if not part:
            continue
        m = _TERM.match(part)
        if not m:
            raise ValueError(f"cannot parse term {part!r}")
        if m.group("num") is None and "z" not in part:
            raise ValueError(f"cannot parse term {part!r}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("num") is not None:
            c = Fraction(int(m.group("num")), int(m.group("den") or 1))
        else:
            if "z" not in part:
                raise ValueError(f"cannot parse term {part!r}")
            c = Fraction(1)
        k = 0
        if "z" in part:
            k = int(m.group("pow") or 1)
        if k >= field.deg:
            raise ValueError(f"power z^{k} out of range for this field")
        coeffs[k] += sign * c
    return coeffs


def scalar_from_str(field: CycField, text: str) -> CycScalar:
    text = text.strip()
    m = re.search(r"(?:^|\+)\s*r\*\(", text)
    if m:
        open_idx = text.index("(", m.start())
        close_idx = text.rindex(")")
        b_text = text[open_idx + 1 : close_idx]
        a_text = text[: m.start()].strip().rstrip("+").strip() or "0"
        return field.from_vectors(
            _poly_parse(field, a_text), _poly_parse(field, b_text)
        )
    return field.from_vectors(_poly_parse(field, text))


def table_to_json(
    kind: str,
    field: CycField,
    row_labels: list[str],
    col_labels: list[str],
    entries: list[list[CycScalar]],
) -> dict:
    return {
        "kind": kind,
        "conductor": field.M,
        "radicand": field.radicand,
        "row_labels": row_labels,
        "col_labels": col_labels,
        "entries": [[scalar_to_str(x) for x in row] for row in entries],
    }


def table_to_csv(
    row_labels: list[str], col_labels: list[str], entries: list[list[CycScalar]]
) -> str:
    lines = ["," + ",".join(col_labels)]
    for lbl, row in zip(row_labels, entries):
        lines.append(lbl + "," + ",".join(scalar_to_str(x) for x in row))
    return "\n".join(lines) + "\n"
