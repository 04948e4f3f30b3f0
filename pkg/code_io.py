"""
Code File Format
Lecture et écriture des codes de sous-espaces au format texte

Header line:  q v k N d p e c_0 c_1 ... c_e
    d is the claimed minimum distance, or 'inf' for a single codeword;
    c_0..c_e are the modulus coefficients of GF(q) over GF(p), low degree first.
Then N blocks separated by blank lines, each k lines of v integers in [0, q)
(base-p little-endian element encoding), each block in reduced row echelon form.
"""

import numpy as np

from code_construction import SubspaceCode
from finite_field import FieldSpec
from fq_linalg import Subspace, as_matrix, is_rref, to_lists


class CodeFormatError(ValueError):
    """Malformed code file."""


def format_code(code):
    field = code.field
    d = 'inf' if code.claimed_d is None else str(code.claimed_d)
    header = [field.q, code.v, code.k, len(code), d, field.p, field.e, *field.modulus]
    lines = [' '.join(str(x) for x in header)]
    for U in code:
        lines.append('')
        lines.extend(' '.join(str(x) for x in row) for row in to_lists(U.rep))
    return '\n'.join(lines) + '\n'


def write_code(code, path):
    with open(path, 'w', encoding='utf-8') as f:
        f.write(format_code(code))
    return path


def _parse_header(line):
    parts = line.split()
    if len(parts) < 8:
        raise CodeFormatError(f"header needs 'q v k N d p e modulus...', got {line!r}")
    try:
        q, v, k, n = (int(x) for x in parts[:4])
        d = None if parts[4] == 'inf' else int(parts[4])
        p, e = int(parts[5]), int(parts[6])
        modulus = [int(x) for x in parts[7:]]
    except ValueError as e:
        raise CodeFormatError(f"non-integer header field in {line!r}") from e
    if len(modulus) != e + 1:
        raise CodeFormatError(f"expected {e + 1} modulus coefficients, got {len(modulus)}")
    if p ** e != q:
        raise CodeFormatError(f"q={q} does not match p^e = {p}^{e}")
    return q, v, k, n, d, p, e, modulus


def parse_code(text, strict=False):
    """
    Parse the text format.

    Blocks are loaded as given, without reduction. With strict=False the
    verifier reports non-rref blocks and duplicates; strict=True rejects them here.

    Returns:
        SubspaceCode
    """
    lines = text.splitlines()
    while lines and not lines[0].strip():
        lines.pop(0)
    if not lines:
        raise CodeFormatError("empty code file")

    q, v, k, n, d, p, e, modulus = _parse_header(lines[0])
    try:
        field = FieldSpec(p, e, modulus)
    except ValueError as exc:
        raise CodeFormatError(str(exc)) from exc

    blocks, current = [], []
    for number, line in enumerate(lines[1:], 2):
        if not line.strip():
            if current:
                blocks.append(current)
                current = []
            continue
        try:
            row = [int(x) for x in line.split()]
        except ValueError as exc:
            raise CodeFormatError(f"line {number}: non-integer entry") from exc
        if len(row) != v:
            raise CodeFormatError(f"line {number}: expected {v} entries, got {len(row)}")
        if any(not 0 <= x < q for x in row):
            raise CodeFormatError(f"line {number}: entry outside [0, {q})")
        current.append(row)
    if current:
        blocks.append(current)

    if len(blocks) != n:
        raise CodeFormatError(f"header announces {n} codewords, file holds {len(blocks)}")

    codewords = [Subspace(field, as_matrix(field, np.array(block, dtype=np.int64), v), check=False)
                 for block in blocks]
    if strict:
        seen = set()
        for index, U in enumerate(codewords):
            if not is_rref(U.rep):
                raise CodeFormatError(f"block {index} is not in reduced row echelon form")
            if U.key in seen:
                raise CodeFormatError(f"block {index}: duplicate codeword")
            seen.add(U.key)
    return SubspaceCode(field, v, k, codewords, d, 'file')


def read_code(path, strict=False):
    with open(path, 'r', encoding='utf-8') as f:
        return parse_code(f.read(), strict)
