"""Small helpers for int-as-bitset manipulation."""


def iter_bits(mask):
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_list(mask):
    return list(iter_bits(mask))


def mask_of(indices):
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def permute_mask(mask, images):
    """Image of a set under the point map ``i -> images[i]``."""
    out = 0
    for i in iter_bits(mask):
        out |= 1 << images[i]
    return out
