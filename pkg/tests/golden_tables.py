"""Golden injection tables, transcribed row by row from the worked examples.

Each row is (pre, image, mu, a, b); pre is None for image partitions with
no pre-image.  Partitions are written as tuples of (family, index, mult).
"""

from qinj import Family, Params, Partition

Z, NZ, YZ, NYZ = Family.Z, Family.NZ, Family.YZ, Family.NYZ


def build(parts):
    if parts is None:
        return None
    return Partition.from_counts({(f, i): m for f, i, m in parts})


# (K, L, m, n, y, z) = (4, 2, 3, 5, 2, 1), norm 20.
# Part values: Z -> 1,4,7,10; NYZ -> 10,25; YZ -> 2,5,8,11; NZ -> 5,20.
PARAMS_A = Params(4, 2, 3, 5, 2, 1)
NORM_A = 20
TABLE_A = [
    (((NZ, 2, 1),), ((Z, 2, 5),), 0, 0, 0),
    (((NZ, 1, 4),), ((Z, 1, 20),), 20, 4, 0),
    (((YZ, 2, 1), (NZ, 1, 3)), ((Z, 1, 16), (Z, 2, 1)), 15, 3, 0),
    (((YZ, 2, 2), (NZ, 1, 2)), ((Z, 1, 12), (Z, 2, 2)), 10, 2, 0),
    (((YZ, 2, 3), (NZ, 1, 1)), ((Z, 1, 8), (Z, 2, 3)), 5, 1, 0),
    (((YZ, 2, 4),), ((Z, 1, 4), (Z, 2, 4)), 0, 0, 0),
    (((YZ, 1, 1), (YZ, 3, 1), (NZ, 1, 2)), ((Z, 1, 13), (Z, 3, 1)), 12, 2, 1),
    (((YZ, 1, 1), (YZ, 2, 1), (YZ, 3, 1), (NZ, 1, 1)),
     ((Z, 1, 9), (Z, 2, 1), (Z, 3, 1)), 7, 1, 1),
    (((YZ, 1, 1), (YZ, 2, 2), (YZ, 3, 1)), ((Z, 1, 5), (Z, 2, 2), (Z, 3, 1)), 2, 0, 1),
    (((YZ, 1, 2), (YZ, 4, 1), (NZ, 1, 1)), ((Z, 1, 10), (Z, 4, 1)), 9, 1, 2),
    (((YZ, 1, 2), (YZ, 3, 2)), ((Z, 1, 6), (Z, 3, 2)), 4, 0, 2),
    (((YZ, 1, 2), (YZ, 2, 1), (YZ, 4, 1)), ((Z, 1, 6), (Z, 2, 1), (Z, 4, 1)), 4, 0, 2),
    (((YZ, 1, 5), (NZ, 1, 2)), ((Z, 1, 10), (NYZ, 1, 1)), 10, 2, 0),
    (((YZ, 1, 5), (YZ, 2, 1), (NZ, 1, 1)), ((Z, 1, 6), (Z, 2, 1), (NYZ, 1, 1)), 5, 1, 0),
    (((YZ, 1, 5), (YZ, 2, 2)), ((Z, 1, 2), (Z, 2, 2), (NYZ, 1, 1)), 0, 0, 0),
    (((YZ, 1, 6), (YZ, 3, 1)), ((Z, 1, 3), (Z, 3, 1), (NYZ, 1, 1)), 2, 0, 1),
    (((YZ, 1, 10),), ((NYZ, 1, 2),), 0, 0, 0),
    (None, ((Z, 4, 1), (NYZ, 1, 1)), -1, -1, 2),
    (None, ((Z, 4, 2),), -2, -2, 4),
    (None, ((Z, 1, 1), (Z, 2, 3), (Z, 3, 1)), -3, -1, 1),
    (None, ((Z, 1, 2), (Z, 2, 1), (Z, 3, 2)), -1, -1, 2),
    (None, ((Z, 1, 2), (Z, 2, 2), (Z, 4, 1)), -1, -1, 2),
    (None, ((Z, 1, 3), (Z, 3, 1), (Z, 4, 1)), 1, -1, 3),
]

# (K, L, m, n, y, z) = (3, 2, 4, 3, 4, 3), norm 60.
# Part values: Z -> 3,7,11; NYZ -> 36,48; YZ -> 12,16,20; NZ -> 9,21.
PARAMS_B = Params(3, 2, 4, 3, 4, 3)
NORM_B = 60
TABLE_B = [
    (((NZ, 1, 2), (NZ, 2, 2)), ((Z, 1, 6), (Z, 2, 6)), 6, 2, 0),
    (((YZ, 3, 3),), ((Z, 1, 9), (Z, 3, 3)), 0, 0, 0),
    (((YZ, 1, 1), (NZ, 1, 3), (NZ, 2, 1)), ((Z, 1, 13), (Z, 2, 3)), 13, 3, 1),
    (((YZ, 1, 1), (YZ, 2, 3)), ((Z, 1, 4), (NYZ, 2, 1)), 4, 0, 1),
    (((YZ, 1, 2), (NZ, 1, 4)), ((Z, 1, 20),), 20, 4, 2),
    (((YZ, 1, 2), (YZ, 2, 1), (YZ, 3, 1)), ((Z, 1, 14), (Z, 2, 1), (Z, 3, 1)), 8, 0, 2),
    (((YZ, 1, 5),), ((Z, 1, 8), (NYZ, 1, 1)), 8, 0, 2),
    (None, ((Z, 2, 7), (Z, 3, 1)), -6, -2, 0),
    (None, ((Z, 1, 1), (Z, 2, 3), (NYZ, 1, 1)), 1, -1, 1),
    (None, ((Z, 1, 1), (Z, 2, 5), (Z, 3, 2)), -11, -5, 1),
    (None, ((Z, 1, 2), (Z, 2, 1), (Z, 3, 1), (NYZ, 1, 1)), -4, -4, 2),
    (None, ((Z, 1, 2), (Z, 2, 3), (Z, 3, 3)), -7, -5, 2),
    (None, ((Z, 1, 3), (Z, 2, 1), (Z, 3, 4)), -12, -4, 0),
    (None, ((Z, 1, 7), (Z, 2, 4), (Z, 3, 1)), 1, -1, 1),
    (None, ((Z, 1, 8), (Z, 2, 2), (Z, 3, 2)), -4, -4, 2),
]


def as_record_set(rows):
    """Set of (pre, image, mu, a, b) with partitions built."""
    return {(build(pre), build(img), mu, a, b) for pre, img, mu, a, b in rows}
