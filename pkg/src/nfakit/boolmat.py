"""Square boolean matrices with bit-packed rows: product and power."""

from __future__ import annotations

from dataclasses import dataclass


class DimensionMismatchError(ValueError):
    """Operands of a matrix product have different dimensions."""


# bit positions set in each possible byte value, used to walk packed rows
_BYTE_BITS = tuple(tuple(k for k in range(8) if b >> k & 1) for b in range(256))

_mul_calls = 0
_default_method = "packed"

_METHODS = ("packed", "naive")


@dataclass(frozen=True)
class BoolMatrix:
    """dim x dim boolean matrix; bit j of rows[i] is entry (i, j)."""

    dim: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"dim must be >= 1, got {self.dim}")
        object.__setattr__(self, "rows", tuple(self.rows))
        if len(self.rows) != self.dim:
            raise ValueError(f"expected {self.dim} rows, got {len(self.rows)}")
        for i, row in enumerate(self.rows):
            # bits at positions >= dim must stay zero
            if row < 0 or row >> self.dim:
                raise ValueError(f"row {i} has bits outside columns 0..{self.dim - 1}")

    def get(self, i: int, j: int) -> bool:
        if not (0 <= i < self.dim and 0 <= j < self.dim):
            raise IndexError(f"entry ({i}, {j}) out of range for dim {self.dim}")
        return bool(self.rows[i] >> j & 1)


def identity(dim: int) -> BoolMatrix:
    """Identity matrix, the neutral element of the boolean product."""
    return BoolMatrix(dim, tuple(1 << i for i in range(dim)))


def set_default_method(name: str) -> None:
    """Select the multiplier used when mul() is called without a method."""
    global _default_method
    if name not in _METHODS:
        raise ValueError(f"unknown multiplier {name!r}, expected one of {_METHODS}")
    _default_method = name


def mul_calls() -> int:
    """Number of boolean matrix multiplications since the last reset."""
    return _mul_calls


def reset_mul_calls() -> None:
    global _mul_calls
    _mul_calls = 0


def mul(a: BoolMatrix, b: BoolMatrix, method: str | None = None) -> BoolMatrix:
    """Boolean product: entry (i,j) = OR over k of a(i,k) AND b(k,j)."""
    global _mul_calls
    if a.dim != b.dim:
        raise DimensionMismatchError(
            f"cannot multiply {a.dim}x{a.dim} by {b.dim}x{b.dim}"
        )
    chosen = _default_method if method is None else method
    if chosen not in _METHODS:
        raise ValueError(f"unknown multiplier {chosen!r}, expected one of {_METHODS}")
    _mul_calls += 1
    if chosen == "packed":
        rows = _mul_rows_packed(a.rows, b.rows, a.dim)
    else:
        rows = _mul_rows_naive(a.rows, b.rows, a.dim)
    return BoolMatrix(a.dim, tuple(rows))


def power(a: BoolMatrix, e: int) -> BoolMatrix:
    """Raise a to the e-th boolean power with O(log e) products."""
    if e < 0 or e >> 64:
        raise ValueError(f"exponent must fit in 64 unsigned bits, got {e}")
    if e == 0:
        return identity(a.dim)
    result = a
    for shift in range(e.bit_length() - 2, -1, -1):
        result = mul(result, result)
        if e >> shift & 1:
            result = mul(result, a)
    return result


def _mul_rows_packed(arows, brows, dim):
    # result row i = OR of b's rows k over the set bits k of a's row i;
    # sparse rows walk their set bits, dense rows scan bytes instead
    nbytes = (dim + 7) >> 3
    out = []
    for row in arows:
        acc = 0
        if row:
            if row.bit_count() <= 64:
                bits = row
                while bits:
                    low = bits & -bits
                    acc |= brows[low.bit_length() - 1]
                    bits ^= low
            else:
                for byte_index, byte in enumerate(row.to_bytes(nbytes, "little")):
                    if byte:
                        base = byte_index << 3
                        for k in _BYTE_BITS[byte]:
                            acc |= brows[base + k]
        out.append(acc)
    return out


def _mul_rows_naive(arows, brows, dim):
    # scalar triple loop, kept as the slow reference multiplier
    out = []
    for i in range(dim):
        row = 0
        for j in range(dim):
            for k in range(dim):
                if arows[i] >> k & 1 and brows[k] >> j & 1:
                    row |= 1 << j
                    break
        out.append(row)
    return out
