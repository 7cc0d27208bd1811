"""Small helpers for subsets stored as Python int bitmasks."""


def bits(mask):
    """Yield the indices set in ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(indices):
    m = 0
    for i in indices:
        m |= 1 << int(i)
    return m


def popcount(mask):
    return bin(mask).count("1")


def canonical_key(mask):
    """Sort key: cardinality first, then the sorted index tuple."""
    return (popcount(mask), tuple(bits(mask)))
