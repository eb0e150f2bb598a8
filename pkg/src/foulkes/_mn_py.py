"""Pure-Python Murnaghan-Nakayama kernel.

A partition is held as a beta-set bitmask: bit x set means a first-column
beta-number x.  The mask is kept minimal (bit 0 clear, one bead per
nonzero part; the empty partition is mask 0).  Removing a border strip of
length k moves a bead from x to the free position x-k; the strip height is
the number of beads strictly between the two positions.

Cycle types are interned into suffix chains so the memo is shared across
every column of a table build.  Values are exact Python ints.
"""

BACKEND = "python"


def _mask_of(parts):
    mask = 0
    r = len(parts)
    for idx, part in enumerate(parts):
        mask |= 1 << (part + r - 1 - idx)
    return mask


def _new_chain():
    # suffix id 0 is the empty cycle type
    return {(): 0}, [0], [0]


def _intern(rho, ids, first_part, tail_id):
    sid = ids.get(rho)
    if sid is None:
        tail = _intern(rho[1:], ids, first_part, tail_id)
        sid = len(first_part)
        ids[rho] = sid
        first_part.append(rho[0])
        tail_id.append(tail)
    return sid


def _eval(mask, sid, first_part, tail_id, memo):
    if sid == 0:
        return 1
    key = (mask, sid)
    cached = memo.get(key)
    if cached is not None:
        return cached
    k = first_part[sid]
    nxt = tail_id[sid]
    total = 0
    # bit y of cand set iff there is a bead at y+k and none at y
    cand = (mask >> k) & ~mask
    while cand:
        low = cand & -cand
        cand ^= low
        y = low.bit_length() - 1
        x = y + k
        child = mask ^ (1 << x) ^ low
        while child & 1:
            child >>= 1
        between = mask & ((1 << x) - (low << 1))
        if between.bit_count() & 1:
            total -= _eval(child, nxt, first_part, tail_id, memo)
        else:
            total += _eval(child, nxt, first_part, tail_id, memo)
    memo[key] = total
    return total


def value(lam, rho):
    """Single character value; lam and rho are descending tuples of equal sum."""
    ids, first_part, tail_id = _new_chain()
    sid = _intern(tuple(rho), ids, first_part, tail_id)
    return _eval(_mask_of(lam), sid, first_part, tail_id, {})


def row(lam, rhos):
    """Values of one character on many cycle types, sharing a memo."""
    ids, first_part, tail_id = _new_chain()
    memo = {}
    mask = _mask_of(lam)
    out = []
    for rho in rhos:
        sid = _intern(tuple(rho), ids, first_part, tail_id)
        out.append(_eval(mask, sid, first_part, tail_id, memo))
    return out


def table(rows, cols):
    """Full matrix of character values with one shared memo."""
    ids, first_part, tail_id = _new_chain()
    memo = {}
    sids = [_intern(tuple(rho), ids, first_part, tail_id) for rho in cols]
    return [
        [_eval(_mask_of(lam), sid, first_part, tail_id, memo) for sid in sids]
        for lam in rows
    ]
