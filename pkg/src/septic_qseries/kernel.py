"""Integer convolution kernels for dense series rows.

A series over Q(zeta_M) with d = phi(M) coordinates is held as a flat list of
integers, row-major: ``nums[i*d + j]`` is coordinate j of the i-th stored
coefficient.  Products are formed by Kronecker substitution: both operands are
packed into a single Python integer (one fixed-width slot per coefficient,
with a row stride of 2d-1 so that zeta-degrees never collide), multiplied with
CPython's big-integer multiply, and unpacked.  The schoolbook routine is kept
as the reference the packed path is tested against.
"""
from __future__ import annotations

from .ring import euler_phi, reduction_table

# below this many scalar products the schoolbook loop wins
_NAIVE_CUTOFF = 400


def reduce_rows(raw, n, m):
    """Fold n rows of 2d-1 zeta-coefficients down to d coordinates each."""
    d = euler_phi(m)
    if d == 1:
        return raw
    s = 2 * d - 1
    table = reduction_table(m)
    out = [0] * (n * d)
    for i in range(n):
        base = i * s
        o = i * d
        for j in range(d):
            out[o + j] = raw[base + j]
        for k in range(d, s):
            c = raw[base + k]
            if c:
                for j, r in enumerate(table[k]):
                    if r:
                        out[o + j] += c * r
    return out


def conv_naive(a, na, b, nb, m, n_out):
    """Schoolbook product of two row lists, truncated to n_out rows."""
    d = euler_phi(m)
    s = 2 * d - 1
    raw = [0] * (n_out * s)
    for i in range(min(na, n_out)):
        ai = a[i * d:(i + 1) * d]
        if not any(ai):
            continue
        for k in range(min(nb, n_out - i)):
            bk = b[k * d:(k + 1) * d]
            base = (i + k) * s
            for x, u in enumerate(ai):
                if u:
                    for y, v in enumerate(bk):
                        if v:
                            raw[base + x + y] += u * v
    return reduce_rows(raw, n_out, m)


def _slot_values(nums, n, d, s):
    if d == 1:
        return nums[:n]
    out = [0] * (n * s)
    for i in range(n):
        out[i * s:i * s + d] = nums[i * d:(i + 1) * d]
    return out


def _pack(vals, nbytes):
    off = 1 << (8 * nbytes - 1)
    blob = b"".join((v + off).to_bytes(nbytes, "little") for v in vals)
    bias = int.from_bytes(off.to_bytes(nbytes, "little") * len(vals), "little")
    return int.from_bytes(blob, "little") - bias


def _unpack(x, count, nbytes):
    off = 1 << (8 * nbytes - 1)
    bias = int.from_bytes(off.to_bytes(nbytes, "little") * count, "little")
    total = 8 * nbytes * count
    x = (x + bias) & ((1 << total) - 1)
    blob = x.to_bytes(nbytes * count, "little")
    fb = int.from_bytes
    return [fb(blob[i:i + nbytes], "little") - off for i in range(0, nbytes * count, nbytes)]


def conv_packed(a, na, b, nb, m, n_out):
    """Kronecker-substitution product, bit-identical to :func:`conv_naive`."""
    d = euler_phi(m)
    s = 2 * d - 1
    na = min(na, n_out)
    nb = min(nb, n_out)
    if na == 0 or nb == 0:
        return [0] * (n_out * d)
    a = a[:na * d]
    b = b[:nb * d]
    amax = max(map(abs, a))
    bmax = max(map(abs, b))
    if amax == 0 or bmax == 0:
        return [0] * (n_out * d)
    bound = amax * bmax * min(na, nb) * d
    nbytes = (bound.bit_length() + 2 + 7) // 8
    pa = _pack(_slot_values(a, na, d, s), nbytes)
    pb = _pack(_slot_values(b, nb, d, s), nbytes)
    count = min(n_out, na + nb - 1) * s
    raw = _unpack(pa * pb, count, nbytes)
    if len(raw) < n_out * s:
        raw.extend([0] * (n_out * s - len(raw)))
    return reduce_rows(raw, n_out, m)


def conv(a, na, b, nb, m, n_out):
    d = euler_phi(m)
    work = min(na, n_out) * min(nb, n_out) * d * d
    if work <= _NAIVE_CUTOFF:
        return conv_naive(a, na, b, nb, m, n_out)
    return conv_packed(a, na, b, nb, m, n_out)
