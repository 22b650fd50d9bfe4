"""Line-oriented text formats for algebras, modules, and twists.

All three are sparse listings of nonzero structure constants over a field
block ``field p <p> k <k> modulus [c0,...,ck]``; see FORMAT.md for the
grammar.  Serialization is canonical (sorted indices), so files diff cleanly
and an algebra digest can be taken over the bytes.
"""

from __future__ import annotations

import hashlib

from .ff import Field, FieldError
from .hopf import HopfAlgebra, HopfError, ModuleRep, TensorElement, solve_antipode
from .twist import Twist, twist_validate


class ParseError(ValueError):
    def __init__(self, lineno: int | None, message: str):
        self.lineno = lineno
        prefix = f"line {lineno}: " if lineno is not None else ""
        super().__init__(prefix + message)


class ValidationError(HopfError):
    pass


_HOPF_SECTIONS = {"mult": 3, "comult": 3, "unit": 1, "counit": 1, "antipode": 2}


class _Lines:
    """Comment/blank-stripped line stream with positions kept for errors."""

    def __init__(self, text: str):
        self.items = []
        for no, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if line:
                self.items.append((no, line))

    def __iter__(self):
        return iter(self.items)


def _parse_field(no: int, tokens: list[str]) -> Field:
    # field p <p> k <k> [modulus [c0,...]]
    try:
        if tokens[0] != "p" or tokens[2] != "k":
            raise ValueError
        p = int(tokens[1])
        k = int(tokens[3])
        modulus = None
        if len(tokens) > 4:
            if tokens[4] != "modulus" or len(tokens) != 6:
                raise ValueError
            lit = tokens[5]
            if not (lit.startswith("[") and lit.endswith("]")):
                raise ValueError
            modulus = [int(t) for t in lit[1:-1].split(",")]
    except (ValueError, IndexError):
        raise ParseError(no, f"malformed field block: {' '.join(tokens)}") from None
    if k == 1 and modulus == [0, 1]:
        modulus = None  # GF(p)[x]/(x): the canonical degree-1 placeholder
    try:
        return Field(p, k, modulus)
    except FieldError as exc:
        raise ParseError(no, str(exc)) from None


def _field_line(F: Field) -> str:
    mod = F.modulus if F.modulus is not None else [0, 1]
    return f"field p {F.p} k {F.k} modulus [" + ",".join(str(c) for c in mod) + "]"


def _entry(no, tokens, n_indices, F, dim):
    if len(tokens) != n_indices + 1:
        raise ParseError(no, f"expected {n_indices} indices and a coefficient")
    try:
        idx = tuple(int(t) for t in tokens[:n_indices])
    except ValueError:
        raise ParseError(no, f"bad index in {' '.join(tokens)}") from None
    for i in idx:
        if not 0 <= i < dim:
            raise ParseError(no, f"index {i} out of range 0..{dim - 1}")
    try:
        c = F.parse_element(tokens[-1])
    except FieldError as exc:
        raise ParseError(no, str(exc)) from None
    return idx, c


def parse_hopf(text: str, verify: bool = True) -> HopfAlgebra:
    lines = iter(_Lines(text))
    try:
        no, header = next(lines)
    except StopIteration:
        raise ParseError(None, "empty input") from None
    if header != "hopf v1":
        raise ParseError(no, f"expected 'hopf v1' header, got {header!r}")

    F = None
    dim = None
    name = ""
    basis_names = None
    tensors: dict[str, dict] = {}
    section = None
    seen_antipode = False

    for no, line in lines:
        tokens = line.split()
        key = tokens[0]
        if key == "name":
            name = " ".join(tokens[1:])
            continue
        if key == "basis_names":
            basis_names = tokens[1:]
            continue
        if key == "field":
            F = _parse_field(no, tokens[1:])
            continue
        if key == "dim":
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise ParseError(no, "dim wants a single nonnegative integer")
            dim = int(tokens[1])
            continue
        if key.endswith(":") and key[:-1] in _HOPF_SECTIONS:
            section = key[:-1]
            if section == "antipode":
                seen_antipode = True
            tensors.setdefault(section, {})
            continue
        if section is None:
            raise ParseError(no, f"entry {line!r} outside any section")
        if F is None or dim is None:
            raise ParseError(no, "field and dim must come before tensor sections")
        idx, c = _entry(no, tokens, _HOPF_SECTIONS[section], F, dim)
        if idx in tensors[section]:
            raise ParseError(no, f"duplicate entry {idx} in {section}")
        tensors[section][idx] = c

    if F is None:
        raise ParseError(None, "missing field block")
    if dim is None:
        raise ParseError(None, "missing dim")
    for sec in ("mult", "comult", "unit", "counit"):
        if sec not in tensors:
            raise ParseError(None, f"missing section {sec}:")
    if basis_names is not None and len(basis_names) != dim:
        raise ParseError(None, f"{len(basis_names)} basis names for dim {dim}")

    n = dim
    mult = [[[0] * n for _ in range(n)] for _ in range(n)]
    for (i, j, k), c in tensors["mult"].items():
        mult[i][j][k] = c
    comult = [[[0] * n for _ in range(n)] for _ in range(n)]
    for (i, j, k), c in tensors["comult"].items():
        comult[i][j][k] = c
    unit = [0] * n
    for (i,), c in tensors["unit"].items():
        unit[i] = c
    counit = [0] * n
    for (i,), c in tensors["counit"].items():
        counit[i] = c
    if seen_antipode:
        antipode = [[0] * n for _ in range(n)]
        for (i, j), c in tensors["antipode"].items():
            antipode[i][j] = c
    else:
        antipode = solve_antipode(F, mult, comult, unit, counit)

    H = HopfAlgebra(F, mult, comult, unit, counit, antipode, name=name)
    if basis_names is not None:
        H.basis_names = basis_names
    if verify:
        rep = H.verify_axioms()
        if not rep.ok:
            raise ValidationError(
                "axioms fail: " + "; ".join(e.name for e in rep.failures())
            )
    return H


def _serialize_body(H: HopfAlgebra) -> list[str]:
    """Structure-only canonical lines (no name), the digest input."""
    F = H.field
    n = H.n
    out = [_field_line(F), f"dim {n}"]
    out.append("mult:")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if H.mult[i][j][k]:
                    out.append(f"{i} {j} {k} {F.format_element(H.mult[i][j][k])}")
    out.append("comult:")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if H.comult[i][j][k]:
                    out.append(f"{i} {j} {k} {F.format_element(H.comult[i][j][k])}")
    out.append("unit:")
    for i in range(n):
        if H.unit[i]:
            out.append(f"{i} {F.format_element(H.unit[i])}")
    out.append("counit:")
    for i in range(n):
        if H.counit[i]:
            out.append(f"{i} {F.format_element(H.counit[i])}")
    out.append("antipode:")
    for i in range(n):
        for j in range(n):
            if H.antipode[i][j]:
                out.append(f"{i} {j} {F.format_element(H.antipode[i][j])}")
    return out


def serialize_hopf(H: HopfAlgebra) -> str:
    out = ["hopf v1"]
    if H.name:
        out.append(f"name {H.name}")
    names = getattr(H, "basis_names", None)
    if names:
        out.append("basis_names " + " ".join(names))
    out.extend(_serialize_body(H))
    return "\n".join(out) + "\n"


def algebra_digest(H: HopfAlgebra) -> str:
    """16 hex chars over the canonical structure lines; names don't count."""
    body = "\n".join(_serialize_body(H)).encode()
    return hashlib.sha256(body).hexdigest()[:16]


# ---------------------------------------------------------------------------
# modules


def parse_module(text: str, H: HopfAlgebra, verify: bool = True) -> ModuleRep:
    lines = iter(_Lines(text))
    try:
        no, header = next(lines)
    except StopIteration:
        raise ParseError(None, "empty input") from None
    if header != "module v1":
        raise ParseError(no, f"expected 'module v1' header, got {header!r}")
    F = H.field
    dim = None
    name = ""
    digest = None
    entries = {}
    in_action = False
    for no, line in lines:
        tokens = line.split()
        if tokens[0] == "name":
            name = " ".join(tokens[1:])
            continue
        if tokens[0] == "algebra":
            digest = tokens[1] if len(tokens) == 2 else None
            if digest is None:
                raise ParseError(no, "algebra wants one digest token")
            continue
        if tokens[0] == "dim":
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise ParseError(no, "dim wants a single nonnegative integer")
            dim = int(tokens[1])
            continue
        if tokens[0] == "action:":
            in_action = True
            continue
        if not in_action:
            raise ParseError(no, f"entry {line!r} outside the action section")
        if dim is None:
            raise ParseError(no, "dim must come before action:")
        if len(tokens) != 4:
            raise ParseError(no, "action entries are: basis_index row col coeff")
        try:
            i, r, c = int(tokens[0]), int(tokens[1]), int(tokens[2])
        except ValueError:
            raise ParseError(no, f"bad index in {line!r}") from None
        if not 0 <= i < H.n:
            raise ParseError(no, f"basis index {i} out of range 0..{H.n - 1}")
        if not (0 <= r < dim and 0 <= c < dim):
            raise ParseError(no, f"matrix position ({r},{c}) out of range for dim {dim}")
        try:
            entries[(i, r, c)] = F.parse_element(tokens[3])
        except FieldError as exc:
            raise ParseError(no, str(exc)) from None
    if dim is None:
        raise ParseError(None, "missing dim")
    if digest is not None and digest != algebra_digest(H):
        raise ValidationError(f"module file is bound to algebra {digest}, not this one")
    action = [[[0] * dim for _ in range(dim)] for _ in range(H.n)]
    for (i, r, c), v in entries.items():
        action[i][r][c] = v
    V = ModuleRep(H, action, name=name)
    if verify:
        V.validate()
    return V


def serialize_module(V: ModuleRep) -> str:
    H = V.algebra
    F = H.field
    out = ["module v1"]
    if V.name:
        out.append(f"name {V.name}")
    out.append(f"algebra {algebra_digest(H)}")
    out.append(f"dim {V.dim}")
    out.append("action:")
    for i in range(H.n):
        for r in range(V.dim):
            for c in range(V.dim):
                if V.action[i][r][c]:
                    out.append(f"{i} {r} {c} {F.format_element(V.action[i][r][c])}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# twists


def parse_twist(text: str, H: HopfAlgebra, verify: bool = True) -> Twist:
    lines = iter(_Lines(text))
    try:
        no, header = next(lines)
    except StopIteration:
        raise ParseError(None, "empty input") from None
    if header != "twist v1":
        raise ParseError(no, f"expected 'twist v1' header, got {header!r}")
    F = H.field
    digest = None
    coeffs: dict = {}
    inverse: dict = {}
    section = None
    for no, line in lines:
        tokens = line.split()
        if tokens[0] == "algebra":
            if len(tokens) != 2:
                raise ParseError(no, "algebra wants one digest token")
            digest = tokens[1]
            continue
        if tokens[0] in ("coeffs:", "inverse_coeffs:"):
            section = tokens[0][:-1]
            continue
        if section is None:
            raise ParseError(no, f"entry {line!r} outside any section")
        idx, c = _entry(no, tokens, 2, F, H.n)
        target = coeffs if section == "coeffs" else inverse
        if idx in target:
            raise ParseError(no, f"duplicate entry {idx} in {section}")
        target[idx] = c
    if not coeffs:
        raise ParseError(None, "missing coeffs: section")
    if digest is not None and digest != algebra_digest(H):
        raise ValidationError(f"twist file is bound to algebra {digest}, not this one")
    J = TensorElement(H, 2, coeffs)
    J_inv = TensorElement(H, 2, inverse) if inverse else None
    tw = Twist(H, J, J_inv)
    if J_inv is not None and tw.J_inv.mul(tw.J).data != _unit_data(H):
        raise ValidationError("supplied inverse_coeffs do not invert the twist")
    if verify:
        twist_validate(tw)
    return tw


def _unit_data(H: HopfAlgebra) -> dict:
    F = H.field
    return {
        (a, b): F.mul(H.unit[a], H.unit[b])
        for a in range(H.n)
        for b in range(H.n)
        if H.unit[a] and H.unit[b]
    }


def serialize_twist(tw: Twist, include_inverse: bool = True) -> str:
    H = tw.algebra
    F = H.field
    out = ["twist v1", f"algebra {algebra_digest(H)}", "coeffs:"]
    for (i, j), c in sorted(tw.J.data.items()):
        out.append(f"{i} {j} {F.format_element(c)}")
    if include_inverse:
        out.append("inverse_coeffs:")
        for (i, j), c in sorted(tw.J_inv.data.items()):
            out.append(f"{i} {j} {F.format_element(c)}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# path conveniences


def corpus_path(name: str):
    """Absolute path of a bundled corpus file (algebras, twists, modules)."""
    import pathlib

    return pathlib.Path(__file__).parent / "corpus" / name


def load_hopf(path, verify: bool = True) -> HopfAlgebra:
    with open(path, encoding="utf-8") as fh:
        return parse_hopf(fh.read(), verify=verify)


def load_module(path, H: HopfAlgebra, verify: bool = True) -> ModuleRep:
    with open(path, encoding="utf-8") as fh:
        return parse_module(fh.read(), H, verify=verify)


def load_twist(path, H: HopfAlgebra, verify: bool = True) -> Twist:
    with open(path, encoding="utf-8") as fh:
        return parse_twist(fh.read(), H, verify=verify)
