"""Line-based ring files.

    # comment
    p 2
    vars x y z
    weights 2 2 3          (optional, default all 1)
    gens z^2 + x^3 + y^3   (may repeat; comma separated)
"""

from pathlib import Path
from typing import Union

from algebra.field import FieldSpec
from algebra.polynomial import PolynomialRing
from exceptions import ArgumentError, ParseError, RingValidationError
from services.ringkit import RingPresentation, build_ring
from utils.poly_parser import parse_polynomial_list, valid_variable_name

KEYS = ("p", "vars", "weights", "gens")


def _int(token: str, what: str, line: int, column: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", line, column)


def _split_words(rest: str, column: int) -> list[tuple[str, int]]:
    words = []
    pos = 0
    for word in rest.split():
        pos = rest.index(word, pos)
        words.append((word, column + pos))
        pos += len(word)
    return words


def parse_ring_file(text: str, name: str = "ring") -> RingPresentation:
    seen: dict[str, int] = {}
    p = None
    variables: list[str] = []
    weights_entry = None
    gens_lines: list[tuple[str, int, int]] = []
    last_line = 0

    for line_no, raw in enumerate(text.splitlines(), start=1):
        last_line = line_no
        body = raw.split("#", 1)[0].rstrip()
        stripped = body.lstrip()
        if not stripped:
            continue
        key_col = len(body) - len(stripped) + 1
        key = stripped.split(None, 1)[0]
        rest_offset = key_col - 1 + len(key)
        rest = body[rest_offset:]
        rest_col = rest_offset + 1
        if key not in KEYS:
            raise ParseError(f"unknown key {key!r}", line_no, key_col)
        if key != "gens" and key in seen:
            raise ParseError(f"duplicate key {key!r} (first on line {seen[key]})", line_no, key_col)
        seen.setdefault(key, line_no)
        words = _split_words(rest, rest_col)

        if key == "p":
            if len(words) != 1:
                raise ParseError("p takes exactly one integer", line_no, key_col)
            value, col = words[0]
            p = _int(value, "p", line_no, col)
            try:
                FieldSpec(p)
            except RingValidationError as exc:
                raise ParseError(exc.detail, line_no, col)
        elif key == "vars":
            if not words:
                raise ParseError("vars needs at least one name", line_no, key_col)
            for word, col in words:
                if not valid_variable_name(word):
                    raise ParseError(f"invalid variable name {word!r}", line_no, col)
                if word in variables:
                    raise ParseError(f"duplicate variable {word!r}", line_no, col)
                variables.append(word)
        elif key == "weights":
            weights = []
            for word, col in words:
                w = _int(word, "weight", line_no, col)
                if w < 1:
                    raise ParseError(f"weights must be positive, got {w}", line_no, col)
                weights.append(w)
            weights_entry = (weights, line_no, key_col)
        else:
            if not rest.strip():
                raise ParseError("gens needs at least one polynomial", line_no, key_col)
            gens_lines.append((rest, line_no, rest_col))

    if p is None:
        raise ParseError("missing key 'p'", last_line + 1, 1)
    if not variables:
        raise ParseError("missing key 'vars'", last_line + 1, 1)
    weight_values = None
    if weights_entry is not None:
        weight_values, w_line, w_col = weights_entry
        if len(weight_values) != len(variables):
            raise ParseError(
                f"{len(weight_values)} weights for {len(variables)} variables", w_line, w_col
            )

    try:
        ambient = PolynomialRing(FieldSpec(p), variables, weight_values)
    except ArgumentError as exc:
        raise ParseError(exc.detail, seen["vars"], 1)
    gens = []
    for rest, line_no, col in gens_lines:
        for poly in parse_polynomial_list(rest, ambient, line_no, col):
            if not poly.is_quasi_homogeneous():
                raise ParseError(
                    f"inhomogeneous generator {poly}: term degrees {poly.term_degrees()}", line_no, col
                )
            gens.append(poly)
    try:
        return build_ring(p, variables, weight_values, gens, name=name)
    except RingValidationError as exc:
        raise ParseError(exc.detail, seen.get("gens", seen["p"]), 1)


def load_ring_file(path: Union[str, Path]) -> RingPresentation:
    path = Path(path)
    return parse_ring_file(path.read_text(encoding="utf-8"), name=path.stem)


def format_ring_file(R: RingPresentation, comment: str = "") -> str:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"p {R.p}")
    lines.append("vars " + " ".join(R.variables))
    if any(w != 1 for w in R.weights):
        lines.append("weights " + " ".join(str(w) for w in R.weights))
    for g in R.defining.generators:
        lines.append(f"gens {g}")
    return "\n".join(lines) + "\n"
