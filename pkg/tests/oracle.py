"""Independent brute-force oracle for cokernel lengths over F_2[[pi]]/pi^N.

Everything here works on plain integer bitmasks (bit j = coefficient of pi^j)
with XOR addition and shift-multiplication, and counts group elements by
explicit enumeration.  It shares no code with the Smith-normal-form path it is
used to check.
"""


def series_to_bits(x) -> int:
    """Encode an element of F_2[[pi]]/pi^N as an integer bitmask."""
    bits = 0
    for j, c in enumerate(x.coeffs):
        if c % 2:
            bits |= 1 << j
    return bits


def matrix_to_bits(M):
    return [[series_to_bits(M.entry(i, j)) for j in range(M.cols)] for i in range(M.rows)]


def enumerate_image_subgroup(matrix_bits, rows, cols, precision):
    """The image of the matrix acting on (O/pi^N)^cols, enumerated element by
    element as a subgroup of (O/pi^N)^rows."""
    mask = (1 << precision) - 1
    zero = (0,) * rows
    span = {zero}
    for j in range(cols):
        for k in range(precision):
            gen = tuple(((matrix_bits[i][j] << k) & mask) for i in range(rows))
            if gen in span:
                continue
            span |= {tuple(a ^ b for a, b in zip(elem, gen)) for elem in span}
    return span


def cokernel_log2(M, precision) -> int:
    """log_2 of the cardinality of coker(M) over O/pi^N, by enumeration.

    Valid as the O-module length whenever the true cokernel is torsion with
    all elementary divisor valuations < precision.
    """
    bits = matrix_to_bits(M)
    image = enumerate_image_subgroup(bits, M.rows, M.cols, precision)
    size = len(image)
    log_im = size.bit_length() - 1
    assert 1 << log_im == size, "image of a linear map must have 2-power order"
    return precision * M.rows - log_im
