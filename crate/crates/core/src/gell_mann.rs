// @generated by scripts/gen_gell_mann.py; do not edit.
//! su(3) structure constants as (a, b, c, r_num, r_den, s_num, s_den),
//! value = r + s*sqrt(3), zero-based indices. Nonzero entries only.

pub(crate) const D_TENSOR: &[(usize, usize, usize, i64, i64, i64, i64)] = &[
    (0, 0, 7, 0, 1, 1, 3),
    (0, 3, 5, 1, 2, 0, 1),
    (0, 4, 6, 1, 2, 0, 1),
    (0, 5, 3, 1, 2, 0, 1),
    (0, 6, 4, 1, 2, 0, 1),
    (0, 7, 0, 0, 1, 1, 3),
    (1, 1, 7, 0, 1, 1, 3),
    (1, 3, 6, -1, 2, 0, 1),
    (1, 4, 5, 1, 2, 0, 1),
    (1, 5, 4, 1, 2, 0, 1),
    (1, 6, 3, -1, 2, 0, 1),
    (1, 7, 1, 0, 1, 1, 3),
    (2, 2, 7, 0, 1, 1, 3),
    (2, 3, 3, 1, 2, 0, 1),
    (2, 4, 4, 1, 2, 0, 1),
    (2, 5, 5, -1, 2, 0, 1),
    (2, 6, 6, -1, 2, 0, 1),
    (2, 7, 2, 0, 1, 1, 3),
    (3, 0, 5, 1, 2, 0, 1),
    (3, 1, 6, -1, 2, 0, 1),
    (3, 2, 3, 1, 2, 0, 1),
    (3, 3, 2, 1, 2, 0, 1),
    (3, 3, 7, 0, 1, -1, 6),
    (3, 5, 0, 1, 2, 0, 1),
    (3, 6, 1, -1, 2, 0, 1),
    (3, 7, 3, 0, 1, -1, 6),
    (4, 0, 6, 1, 2, 0, 1),
    (4, 1, 5, 1, 2, 0, 1),
    (4, 2, 4, 1, 2, 0, 1),
    (4, 4, 2, 1, 2, 0, 1),
    (4, 4, 7, 0, 1, -1, 6),
    (4, 5, 1, 1, 2, 0, 1),
    (4, 6, 0, 1, 2, 0, 1),
    (4, 7, 4, 0, 1, -1, 6),
    (5, 0, 3, 1, 2, 0, 1),
    (5, 1, 4, 1, 2, 0, 1),
    (5, 2, 5, -1, 2, 0, 1),
    (5, 3, 0, 1, 2, 0, 1),
    (5, 4, 1, 1, 2, 0, 1),
    (5, 5, 2, -1, 2, 0, 1),
    (5, 5, 7, 0, 1, -1, 6),
    (5, 7, 5, 0, 1, -1, 6),
    (6, 0, 4, 1, 2, 0, 1),
    (6, 1, 3, -1, 2, 0, 1),
    (6, 2, 6, -1, 2, 0, 1),
    (6, 3, 1, -1, 2, 0, 1),
    (6, 4, 0, 1, 2, 0, 1),
    (6, 6, 2, -1, 2, 0, 1),
    (6, 6, 7, 0, 1, -1, 6),
    (6, 7, 6, 0, 1, -1, 6),
    (7, 0, 0, 0, 1, 1, 3),
    (7, 1, 1, 0, 1, 1, 3),
    (7, 2, 2, 0, 1, 1, 3),
    (7, 3, 3, 0, 1, -1, 6),
    (7, 4, 4, 0, 1, -1, 6),
    (7, 5, 5, 0, 1, -1, 6),
    (7, 6, 6, 0, 1, -1, 6),
    (7, 7, 7, 0, 1, -1, 3),
];

pub(crate) const F_TENSOR: &[(usize, usize, usize, i64, i64, i64, i64)] = &[
    (0, 1, 2, 1, 1, 0, 1),
    (0, 2, 1, -1, 1, 0, 1),
    (0, 3, 6, 1, 2, 0, 1),
    (0, 4, 5, -1, 2, 0, 1),
    (0, 5, 4, 1, 2, 0, 1),
    (0, 6, 3, -1, 2, 0, 1),
    (1, 0, 2, -1, 1, 0, 1),
    (1, 2, 0, 1, 1, 0, 1),
    (1, 3, 5, 1, 2, 0, 1),
    (1, 4, 6, 1, 2, 0, 1),
    (1, 5, 3, -1, 2, 0, 1),
    (1, 6, 4, -1, 2, 0, 1),
    (2, 0, 1, 1, 1, 0, 1),
    (2, 1, 0, -1, 1, 0, 1),
    (2, 3, 4, 1, 2, 0, 1),
    (2, 4, 3, -1, 2, 0, 1),
    (2, 5, 6, -1, 2, 0, 1),
    (2, 6, 5, 1, 2, 0, 1),
    (3, 0, 6, -1, 2, 0, 1),
    (3, 1, 5, -1, 2, 0, 1),
    (3, 2, 4, -1, 2, 0, 1),
    (3, 4, 2, 1, 2, 0, 1),
    (3, 4, 7, 0, 1, 1, 2),
    (3, 5, 1, 1, 2, 0, 1),
    (3, 6, 0, 1, 2, 0, 1),
    (3, 7, 4, 0, 1, -1, 2),
    (4, 0, 5, 1, 2, 0, 1),
    (4, 1, 6, -1, 2, 0, 1),
    (4, 2, 3, 1, 2, 0, 1),
    (4, 3, 2, -1, 2, 0, 1),
    (4, 3, 7, 0, 1, -1, 2),
    (4, 5, 0, -1, 2, 0, 1),
    (4, 6, 1, 1, 2, 0, 1),
    (4, 7, 3, 0, 1, 1, 2),
    (5, 0, 4, -1, 2, 0, 1),
    (5, 1, 3, 1, 2, 0, 1),
    (5, 2, 6, 1, 2, 0, 1),
    (5, 3, 1, -1, 2, 0, 1),
    (5, 4, 0, 1, 2, 0, 1),
    (5, 6, 2, -1, 2, 0, 1),
    (5, 6, 7, 0, 1, 1, 2),
    (5, 7, 6, 0, 1, -1, 2),
    (6, 0, 3, 1, 2, 0, 1),
    (6, 1, 4, 1, 2, 0, 1),
    (6, 2, 5, -1, 2, 0, 1),
    (6, 3, 0, -1, 2, 0, 1),
    (6, 4, 1, -1, 2, 0, 1),
    (6, 5, 2, 1, 2, 0, 1),
    (6, 5, 7, 0, 1, -1, 2),
    (6, 7, 5, 0, 1, 1, 2),
    (7, 3, 4, 0, 1, 1, 2),
    (7, 4, 3, 0, 1, -1, 2),
    (7, 5, 6, 0, 1, 1, 2),
    (7, 6, 5, 0, 1, -1, 2),
];
