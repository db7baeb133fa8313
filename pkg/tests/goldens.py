"""Frozen expected values for the two enumeration tables.

Rows are (n, delta, degree_sequence_string, x, y, count), ordered by n
then delta, exactly as the CSV renderer emits them.  These literals are
the reference; tests must never derive them from the library under test.
"""

BICENTRAL_ROWS = [
    (4, 3, "3 3 2 2", 0, 2, 1),
    (5, 4, "4 4 2 2 2", 0, 3, 1),
    (6, 4, "4 4 3 3 2 2", 2, 2, 1),
    (6, 5, "5 5 2 2 2 2", 0, 4, 1),
    (7, 5, "5 5 3 3 2 2 2", 2, 3, 1),
    (7, 6, "6 6 2 2 2 2 2", 0, 5, 1),
    (8, 5, "5 5 3 3 3 3 2 2", 4, 2, 1),
    (8, 6, "6 6 3 3 2 2 2 2", 2, 4, 1),
    (8, 7, "7 7 2 2 2 2 2 2", 0, 6, 1),
    (9, 6, "6 6 3 3 3 3 2 2 2", 4, 3, 2),
    (9, 7, "7 7 3 3 2 2 2 2 2", 2, 5, 1),
    (9, 8, "8 8 2 2 2 2 2 2 2", 0, 7, 1),
    (10, 6, "6 6 3 3 3 3 3 3 2 2", 6, 2, 1),
    (10, 7, "7 7 3 3 3 3 2 2 2 2", 4, 4, 3),
    (10, 8, "8 8 3 3 2 2 2 2 2 2", 2, 6, 1),
    (10, 9, "9 9 2 2 2 2 2 2 2 2", 0, 8, 1),
    (11, 7, "7 7 3 3 3 3 3 3 2 2 2", 6, 3, 2),
    (11, 8, "8 8 3 3 3 3 2 2 2 2 2", 4, 5, 3),
    (11, 9, "9 9 3 3 2 2 2 2 2 2 2", 2, 7, 1),
    (11, 10, "10 10 2 2 2 2 2 2 2 2 2", 0, 9, 1),
    (12, 7, "7 7 3 3 3 3 3 3 3 3 2 2", 8, 2, 1),
    (12, 8, "8 8 3 3 3 3 3 3 2 2 2 2", 6, 4, 4),
    (12, 9, "9 9 3 3 3 3 2 2 2 2 2 2", 4, 6, 3),
    (12, 10, "10 10 3 3 2 2 2 2 2 2 2 2", 2, 8, 1),
    (12, 11, "11 11 2 2 2 2 2 2 2 2 2 2", 0, 10, 1),
]

TRICENTRAL_ROWS = [
    (3, 2, "2 2 2", 0, 0, 1),
    (6, 4, "4 4 4 2 2 2", 0, 3, 1),
    (7, 4, "4 4 4 3 3 2 2", 2, 2, 1),
    (8, 5, "5 5 5 3 2 2 2 2", 1, 4, 1),
    (9, 5, "5 5 5 3 3 3 2 2 2", 3, 3, 2),
    (9, 6, "6 6 6 2 2 2 2 2 2", 0, 6, 1),
    (10, 6, "6 6 6 3 3 2 2 2 2 2", 2, 5, 4),
    (11, 6, "6 6 6 3 3 3 3 2 2 2 2", 4, 4, 7),
    (11, 7, "7 7 7 3 2 2 2 2 2 2 2", 1, 7, 1),
    (12, 6, "6 6 6 3 3 3 3 3 3 2 2 2", 6, 3, 2),
    (12, 7, "7 7 7 3 3 3 2 2 2 2 2 2", 3, 6, 10),
    (12, 8, "8 8 8 2 2 2 2 2 2 2 2 2", 0, 9, 1),
]

UNICENTRAL_ROWS_4_TO_12 = [
    (n, n - 1, " ".join(["%d" % (n - 1)] + ["3"] * (n - 3) + ["2", "2"]), n - 3, 2, 1)
    for n in range(4, 13)
]

# unlabeled 2-tree class counts for n = 2..13; cross-checked in tests both
# against brute-force labeled generation (n <= 7) and against a second,
# independently ordered generation pass (n <= 9)
CLASS_COUNTS = {
    2: 1,
    3: 1,
    4: 1,
    5: 2,
    6: 5,
    7: 12,
    8: 39,
    9: 136,
    10: 529,
    11: 2171,
    12: 9368,
    13: 41534,
}


def csv_text(rows) -> str:
    lines = ["n,delta,degree_sequence,x,y,count"]
    for n, delta, seq, x, y, count in rows:
        lines.append(f'{n},{delta},"{seq}",{x},{y},{count}')
    return "\n".join(lines) + "\n"
