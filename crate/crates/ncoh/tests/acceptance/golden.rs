//! Frozen reference data for the u in {1,2} row blocks of the graded d2
//! matrices: ten degrees at p = 23 and one at p = 19. Each row lists the
//! entries against the degree-k pair basis; `B` marks positions where the
//! four-term row relation has no term at all (structurally absent), as
//! opposed to a present term whose structure constant happens to be 0.

/// Structurally absent entry.
pub const B: i8 = 99;

/// One reference row: the triple label and its entries against the columns.
pub type GoldenRow = ((usize, usize, usize), &'static [i8]);

pub struct GoldenTable {
    pub p: u32,
    pub k: usize,
    pub columns: &'static [(usize, usize)],
    pub rows: &'static [GoldenRow],
}

pub const TABLES: &[GoldenTable] = &[
    GoldenTable {
        p: 23,
        k: 28,
        columns: &[
            (5, 23),
            (6, 22),
            (7, 21),
            (8, 20),
            (9, 19),
            (10, 18),
            (11, 17),
            (12, 16),
            (13, 15),
        ],
        rows: &[
            ((1, 4, 23), &[0, B, B, B, B, B, B, B, B]),
            ((1, 5, 22), &[0, 1, B, B, B, B, B, B, B]),
            ((1, 6, 21), &[B, -1, -1, B, B, B, B, B, B]),
            ((1, 7, 20), &[B, B, 1, 0, B, B, B, B, B]),
            ((1, 8, 19), &[B, B, B, 0, 1, B, B, B, B]),
            ((1, 9, 18), &[B, B, B, B, -1, -1, B, B, B]),
            ((1, 10, 17), &[B, B, B, B, B, 1, 0, B, B]),
            ((1, 11, 16), &[B, B, B, B, B, B, 0, 1, B]),
            ((1, 12, 15), &[B, B, B, B, B, B, B, -1, -1]),
            ((1, 13, 14), &[B, B, B, B, B, B, B, B, 1]),
            ((2, 3, 23), &[1, B, B, B, B, B, B, B, B]),
            ((2, 4, 22), &[B, -1, B, B, B, B, B, B, B]),
            ((2, 5, 21), &[1, B, 0, B, B, B, B, B, B]),
            ((2, 6, 20), &[B, 0, B, 1, B, B, B, B, B]),
            ((2, 7, 19), &[B, B, -1, B, -1, B, B, B, B]),
            ((2, 8, 18), &[B, B, B, 1, B, 0, B, B, B]),
            ((2, 9, 17), &[B, B, B, B, 0, B, 1, B, B]),
            ((2, 10, 16), &[B, B, B, B, B, -1, B, -1, B]),
            ((2, 11, 15), &[B, B, B, B, B, B, 1, B, 0]),
            ((2, 12, 14), &[B, B, B, B, B, B, B, 0, B]),
        ],
    },
    GoldenTable {
        p: 23,
        k: 29,
        columns: &[
            (6, 23),
            (7, 22),
            (8, 21),
            (9, 20),
            (10, 19),
            (11, 18),
            (12, 17),
            (13, 16),
            (14, 15),
        ],
        rows: &[
            ((1, 5, 23), &[1, B, B, B, B, B, B, B, B]),
            ((1, 6, 22), &[0, -1, B, B, B, B, B, B, B]),
            ((1, 7, 21), &[B, -1, 0, B, B, B, B, B, B]),
            ((1, 8, 20), &[B, B, 1, 1, B, B, B, B, B]),
            ((1, 9, 19), &[B, B, B, 0, -1, B, B, B, B]),
            ((1, 10, 18), &[B, B, B, B, -1, 0, B, B, B]),
            ((1, 11, 17), &[B, B, B, B, B, 1, 1, B, B]),
            ((1, 12, 16), &[B, B, B, B, B, B, 0, -1, B]),
            ((1, 13, 15), &[B, B, B, B, B, B, B, -1, 0]),
            ((2, 4, 23), &[-1, B, B, B, B, B, B, B, B]),
            ((2, 5, 22), &[B, 0, B, B, B, B, B, B, B]),
            ((2, 6, 21), &[1, B, 1, B, B, B, B, B, B]),
            ((2, 7, 20), &[B, 0, B, -1, B, B, B, B, B]),
            ((2, 8, 19), &[B, B, -1, B, 0, B, B, B, B]),
            ((2, 9, 18), &[B, B, B, 1, B, 1, B, B, B]),
            ((2, 10, 17), &[B, B, B, B, 0, B, -1, B, B]),
            ((2, 11, 16), &[B, B, B, B, B, -1, B, 0, B]),
            ((2, 12, 15), &[B, B, B, B, B, B, 1, B, 1]),
            ((2, 13, 14), &[B, B, B, B, B, B, B, 0, 1]),
        ],
    },
    GoldenTable {
        p: 23,
        k: 30,
        columns: &[
            (7, 23),
            (8, 22),
            (9, 21),
            (10, 20),
            (11, 19),
            (12, 18),
            (13, 17),
            (14, 16),
        ],
        rows: &[
            ((1, 6, 23), &[-1, B, B, B, B, B, B, B]),
            ((1, 7, 22), &[0, 0, B, B, B, B, B, B]),
            ((1, 8, 21), &[B, -1, 1, B, B, B, B, B]),
            ((1, 9, 20), &[B, B, 1, -1, B, B, B, B]),
            ((1, 10, 19), &[B, B, B, 0, 0, B, B, B]),
            ((1, 11, 18), &[B, B, B, B, -1, 1, B, B]),
            ((1, 12, 17), &[B, B, B, B, B, 1, -1, B]),
            ((1, 13, 16), &[B, B, B, B, B, B, 0, 0]),
            ((1, 14, 15), &[B, B, B, B, B, B, B, -1]),
            ((2, 5, 23), &[0, B, B, B, B, B, B, B]),
            ((2, 6, 22), &[B, 1, B, B, B, B, B, B]),
            ((2, 7, 21), &[1, B, -1, B, B, B, B, B]),
            ((2, 8, 20), &[B, 0, B, 0, B, B, B, B]),
            ((2, 9, 19), &[B, B, -1, B, 1, B, B, B]),
            ((2, 10, 18), &[B, B, B, 1, B, -1, B, B]),
            ((2, 11, 17), &[B, B, B, B, 0, B, 0, B]),
            ((2, 12, 16), &[B, B, B, B, B, -1, B, 1]),
            ((2, 13, 15), &[B, B, B, B, B, B, 1, B]),
        ],
    },
    GoldenTable {
        p: 23,
        k: 25,
        columns: &[
            (2, 23),
            (3, 22),
            (4, 21),
            (5, 20),
            (6, 19),
            (7, 18),
            (8, 17),
            (9, 16),
            (10, 15),
            (11, 14),
            (12, 13),
        ],
        rows: &[
            ((1, 2, 22), &[0, 1, B, B, B, B, B, B, B, B, B]),
            ((1, 3, 21), &[B, -1, -1, B, B, B, B, B, B, B, B]),
            ((1, 4, 20), &[B, B, 1, 0, B, B, B, B, B, B, B]),
            ((1, 5, 19), &[B, B, B, 0, 1, B, B, B, B, B, B]),
            ((1, 6, 18), &[B, B, B, B, -1, -1, B, B, B, B, B]),
            ((1, 7, 17), &[B, B, B, B, B, 1, 0, B, B, B, B]),
            ((1, 8, 16), &[B, B, B, B, B, B, 0, 1, B, B, B]),
            ((1, 9, 15), &[B, B, B, B, B, B, B, -1, -1, B, B]),
            ((1, 10, 14), &[B, B, B, B, B, B, B, B, 1, 0, B]),
            ((1, 11, 13), &[B, B, B, B, B, B, B, B, B, 0, 1]),
            ((2, 3, 20), &[1, 0, B, 1, B, B, B, B, B, B, B]),
            ((2, 4, 19), &[0, B, -1, B, -1, B, B, B, B, B, B]),
            ((2, 5, 18), &[-1, B, B, 1, B, 0, B, B, B, B, B]),
            ((2, 6, 17), &[1, B, B, B, 0, B, 1, B, B, B, B]),
            ((2, 7, 16), &[0, B, B, B, B, -1, B, -1, B, B, B]),
            ((2, 8, 15), &[-1, B, B, B, B, B, 1, B, 0, B, B]),
            ((2, 9, 14), &[1, B, B, B, B, B, B, 0, B, 1, B]),
            ((2, 10, 13), &[0, B, B, B, B, B, B, B, -1, B, -1]),
            ((2, 11, 12), &[-1, B, B, B, B, B, B, B, B, 1, 0]),
        ],
    },
    GoldenTable {
        p: 19,
        k: 21,
        columns: &[
            (2, 19),
            (3, 18),
            (4, 17),
            (5, 16),
            (6, 15),
            (7, 14),
            (8, 13),
            (9, 12),
            (10, 11),
        ],
        rows: &[
            ((1, 2, 18), &[-1, 1, B, B, B, B, B, B, B]),
            ((1, 3, 17), &[B, 1, -1, B, B, B, B, B, B]),
            ((1, 4, 16), &[B, B, 0, 0, B, B, B, B, B]),
            ((1, 5, 15), &[B, B, B, -1, 1, B, B, B, B]),
            ((1, 6, 14), &[B, B, B, B, 1, -1, B, B, B]),
            ((1, 7, 13), &[B, B, B, B, B, 0, 0, B, B]),
            ((1, 8, 12), &[B, B, B, B, B, B, -1, 1, B]),
            ((1, 9, 11), &[B, B, B, B, B, B, B, 1, -1]),
            ((2, 3, 16), &[-1, -1, B, 1, B, B, B, B, B]),
            ((2, 4, 15), &[1, B, 1, B, -1, B, B, B, B]),
            ((2, 5, 14), &[0, B, B, 0, B, 0, B, B, B]),
            ((2, 6, 13), &[-1, B, B, B, -1, B, 1, B, B]),
            ((2, 7, 12), &[1, B, B, B, B, 1, B, -1, B]),
            ((2, 8, 11), &[0, B, B, B, B, B, 0, B, 0]),
            ((2, 9, 10), &[-1, B, B, B, B, B, B, -1, -1]),
        ],
    },
    GoldenTable {
        p: 23,
        k: 19,
        columns: &[
            (1, 18),
            (2, 17),
            (3, 16),
            (4, 15),
            (5, 14),
            (6, 13),
            (7, 12),
            (8, 11),
            (9, 10),
        ],
        rows: &[
            ((1, 2, 16), &[1, 0, 1, B, B, B, B, B, B]),
            ((1, 3, 15), &[0, B, -1, -1, B, B, B, B, B]),
            ((1, 4, 14), &[-1, B, B, 1, 0, B, B, B, B]),
            ((1, 5, 13), &[1, B, B, B, 0, 1, B, B, B]),
            ((1, 6, 12), &[0, B, B, B, B, -1, -1, B, B]),
            ((1, 7, 11), &[-1, B, B, B, B, B, 1, 0, B]),
            ((1, 8, 10), &[1, B, B, B, B, B, B, 0, 1]),
            ((2, 3, 14), &[B, 1, 0, B, 1, B, B, B, B]),
            ((2, 4, 13), &[B, 0, B, -1, B, -1, B, B, B]),
            ((2, 5, 12), &[B, -1, B, B, 1, B, 0, B, B]),
            ((2, 6, 11), &[B, 1, B, B, B, 0, B, 1, B]),
            ((2, 7, 10), &[B, 0, B, B, B, B, -1, B, -1]),
            ((2, 8, 9), &[B, -1, B, B, B, B, B, 1, 0]),
        ],
    },
    GoldenTable {
        p: 23,
        k: 20,
        columns: &[
            (1, 19),
            (2, 18),
            (3, 17),
            (4, 16),
            (5, 15),
            (6, 14),
            (7, 13),
            (8, 12),
            (9, 11),
        ],
        rows: &[
            ((1, 2, 17), &[0, 1, 1, B, B, B, B, B, B]),
            ((1, 3, 16), &[-1, B, 0, -1, B, B, B, B, B]),
            ((1, 4, 15), &[1, B, B, -1, 0, B, B, B, B]),
            ((1, 5, 14), &[0, B, B, B, 1, 1, B, B, B]),
            ((1, 6, 13), &[-1, B, B, B, B, 0, -1, B, B]),
            ((1, 7, 12), &[1, B, B, B, B, B, -1, 0, B]),
            ((1, 8, 11), &[0, B, B, B, B, B, B, 1, 1]),
            ((1, 9, 10), &[-1, B, B, B, B, B, B, B, 0]),
            ((2, 3, 15), &[B, 0, 1, B, 1, B, B, B, B]),
            ((2, 4, 14), &[B, -1, B, 0, B, -1, B, B, B]),
            ((2, 5, 13), &[B, 1, B, B, -1, B, 0, B, B]),
            ((2, 6, 12), &[B, 0, B, B, B, 1, B, 1, B]),
            ((2, 7, 11), &[B, -1, B, B, B, B, 0, B, -1]),
            ((2, 8, 10), &[B, 1, B, B, B, B, B, -1, B]),
        ],
    },
    GoldenTable {
        p: 23,
        k: 22,
        columns: &[
            (1, 21),
            (2, 20),
            (3, 19),
            (4, 18),
            (5, 17),
            (6, 16),
            (7, 15),
            (8, 14),
            (9, 13),
            (10, 12),
        ],
        rows: &[
            ((1, 2, 19), &[1, 0, 1, B, B, B, B, B, B, B]),
            ((1, 3, 18), &[0, B, -1, -1, B, B, B, B, B, B]),
            ((1, 4, 17), &[-1, B, B, 1, 0, B, B, B, B, B]),
            ((1, 5, 16), &[1, B, B, B, 0, 1, B, B, B, B]),
            ((1, 6, 15), &[0, B, B, B, B, -1, -1, B, B, B]),
            ((1, 7, 14), &[-1, B, B, B, B, B, 1, 0, B, B]),
            ((1, 8, 13), &[1, B, B, B, B, B, B, 0, 1, B]),
            ((1, 9, 12), &[0, B, B, B, B, B, B, B, -1, -1]),
            ((1, 10, 11), &[-1, B, B, B, B, B, B, B, B, 1]),
            ((2, 3, 17), &[B, 1, 0, B, 1, B, B, B, B, B]),
            ((2, 4, 16), &[B, 0, B, -1, B, -1, B, B, B, B]),
            ((2, 5, 15), &[B, -1, B, B, 1, B, 0, B, B, B]),
            ((2, 6, 14), &[B, 1, B, B, B, 0, B, 1, B, B]),
            ((2, 7, 13), &[B, 0, B, B, B, B, -1, B, -1, B]),
            ((2, 8, 12), &[B, -1, B, B, B, B, B, 1, B, 0]),
            ((2, 9, 11), &[B, 1, B, B, B, B, B, B, 0, B]),
        ],
    },
    GoldenTable {
        p: 23,
        k: 23,
        columns: &[
            (1, 22),
            (2, 21),
            (3, 20),
            (4, 19),
            (5, 18),
            (6, 17),
            (7, 16),
            (8, 15),
            (9, 14),
            (10, 13),
            (11, 12),
        ],
        rows: &[
            ((1, 2, 20), &[0, 1, 1, B, B, B, B, B, B, B, B]),
            ((1, 3, 19), &[-1, B, 0, -1, B, B, B, B, B, B, B]),
            ((1, 4, 18), &[1, B, B, -1, 0, B, B, B, B, B, B]),
            ((1, 5, 17), &[0, B, B, B, 1, 1, B, B, B, B, B]),
            ((1, 6, 16), &[-1, B, B, B, B, 0, -1, B, B, B, B]),
            ((1, 7, 15), &[1, B, B, B, B, B, -1, 0, B, B, B]),
            ((1, 8, 14), &[0, B, B, B, B, B, B, 1, 1, B, B]),
            ((1, 9, 13), &[-1, B, B, B, B, B, B, B, 0, -1, B]),
            ((1, 10, 12), &[1, B, B, B, B, B, B, B, B, -1, 0]),
            ((2, 3, 18), &[B, 0, 1, B, 1, B, B, B, B, B, B]),
            ((2, 4, 17), &[B, -1, B, 0, B, -1, B, B, B, B, B]),
            ((2, 5, 16), &[B, 1, B, B, -1, B, 0, B, B, B, B]),
            ((2, 6, 15), &[B, 0, B, B, B, 1, B, 1, B, B, B]),
            ((2, 7, 14), &[B, -1, B, B, B, B, 0, B, -1, B, B]),
            ((2, 8, 13), &[B, 1, B, B, B, B, B, -1, B, 0, B]),
            ((2, 9, 12), &[B, 0, B, B, B, B, B, B, 1, B, 1]),
            ((2, 10, 11), &[B, -1, B, B, B, B, B, B, B, 0, 1]),
        ],
    },
    GoldenTable {
        p: 23,
        k: 24,
        columns: &[
            (1, 23),
            (2, 22),
            (3, 21),
            (4, 20),
            (5, 19),
            (6, 18),
            (7, 17),
            (8, 16),
            (9, 15),
            (10, 14),
            (11, 13),
        ],
        rows: &[
            ((1, 2, 21), &[-1, -1, 1, B, B, B, B, B, B, B, B]),
            ((1, 3, 20), &[1, B, 1, -1, B, B, B, B, B, B, B]),
            ((1, 4, 19), &[0, B, B, 0, 0, B, B, B, B, B, B]),
            ((1, 5, 18), &[-1, B, B, B, -1, 1, B, B, B, B, B]),
            ((1, 6, 17), &[1, B, B, B, B, 1, -1, B, B, B, B]),
            ((1, 7, 16), &[0, B, B, B, B, B, 0, 0, B, B, B]),
            ((1, 8, 15), &[-1, B, B, B, B, B, B, -1, 1, B, B]),
            ((1, 9, 14), &[1, B, B, B, B, B, B, B, 1, -1, B]),
            ((1, 10, 13), &[0, B, B, B, B, B, B, B, B, 0, 0]),
            ((1, 11, 12), &[-1, B, B, B, B, B, B, B, B, B, -1]),
            ((2, 3, 19), &[B, -1, -1, B, 1, B, B, B, B, B, B]),
            ((2, 4, 18), &[B, 1, B, 1, B, -1, B, B, B, B, B]),
            ((2, 5, 17), &[B, 0, B, B, 0, B, 0, B, B, B, B]),
            ((2, 6, 16), &[B, -1, B, B, B, -1, B, 1, B, B, B]),
            ((2, 7, 15), &[B, 1, B, B, B, B, 1, B, -1, B, B]),
            ((2, 8, 14), &[B, 0, B, B, B, B, B, 0, B, 0, B]),
            ((2, 9, 13), &[B, -1, B, B, B, B, B, B, -1, B, 1]),
            ((2, 10, 12), &[B, 1, B, B, B, B, B, B, B, 1, B]),
        ],
    },
    GoldenTable {
        p: 23,
        k: 21,
        columns: &[
            (1, 20),
            (2, 19),
            (3, 18),
            (4, 17),
            (5, 16),
            (6, 15),
            (7, 14),
            (8, 13),
            (9, 12),
            (10, 11),
        ],
        rows: &[
            ((1, 2, 18), &[-1, -1, 1, B, B, B, B, B, B, B]),
            ((1, 3, 17), &[1, B, 1, -1, B, B, B, B, B, B]),
            ((1, 4, 16), &[0, B, B, 0, 0, B, B, B, B, B]),
            ((1, 5, 15), &[-1, B, B, B, -1, 1, B, B, B, B]),
            ((1, 6, 14), &[1, B, B, B, B, 1, -1, B, B, B]),
            ((1, 7, 13), &[0, B, B, B, B, B, 0, 0, B, B]),
            ((1, 8, 12), &[-1, B, B, B, B, B, B, -1, 1, B]),
            ((1, 9, 11), &[1, B, B, B, B, B, B, B, 1, -1]),
            ((2, 3, 16), &[B, -1, -1, B, 1, B, B, B, B, B]),
            ((2, 4, 15), &[B, 1, B, 1, B, -1, B, B, B, B]),
            ((2, 5, 14), &[B, 0, B, B, 0, B, 0, B, B, B]),
            ((2, 6, 13), &[B, -1, B, B, B, -1, B, 1, B, B]),
            ((2, 7, 12), &[B, 1, B, B, B, B, 1, B, -1, B]),
            ((2, 8, 11), &[B, 0, B, B, B, B, B, 0, B, 0]),
            ((2, 9, 10), &[B, -1, B, B, B, B, B, B, -1, -1]),
        ],
    },
];
