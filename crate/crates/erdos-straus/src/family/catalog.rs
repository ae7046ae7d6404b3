//! The 53 family rows.
//!
//! Naming: rows keep their catalog identifiers (F3.1a .. F6.13).  The
//! F3 block has a small fixed summand im2 in 1..=6; the F4 block pairs
//! im1 = 2*(odd) with im2 = 1 mod 4; the F5 block pairs im1 = 4j with
//! im2 = 3 mod 4 (even-m rows first, then odd-m); the F6 block has a
//! power-of-two summand, with divisibility side conditions on the
//! multiplier making the m-formula integral.
//!
//! Every formula is the derivation-order form: the congruence solution
//! substituted into the shared construction.  Where an alternately
//! published closed form disagrees with the congruence characterization,
//! the derivation-order form is stored and the disagreement is recorded
//! in the reconciliation audit (see `reconcile::FORMULA_NOTES`).

use super::{FamilyDescriptor, ParamSpec};

const fn p(name: &'static str, min: i64) -> ParamSpec {
    ParamSpec {
        name,
        min,
        filter: None,
    }
}

fn not2mod3(v: i64) -> bool {
    v % 3 != 2
}

fn not0mod3(v: i64) -> bool {
    v % 3 != 0
}

fn always(_: &[i64], _: i64) -> bool {
    true
}

/// 2^e for small nonnegative e.
fn p2(e: i64) -> i64 {
    1i64 << e
}

pub static CATALOG: &[FamilyDescriptor] = &[
    // ---- small fixed im2 ----
    FamilyDescriptor {
        id: "F3.1a",
        params: &[p("r", 0)],
        multiplier: p("c", 0),
        admissible: always,
        m: |q, c| 7 * q[0] + 4 + c * (12 * q[0] + 7),
        g: |q, c| 2 * (3 * c + 2) * (12 * q[0] + 7),
        im1: |q, _| 2 * (12 * q[0] + 7),
        im2: |_, _| 1,
        m_src: "7r+4+c(12r+7)",
        g_src: "2(3c+2)(12r+7)",
        im1_src: "2(12r+7)",
        im2_src: "1",
        side: "",
        congruence: "m = 7r+4 (mod 12r+7)",
    },
    FamilyDescriptor {
        id: "F3.1b",
        params: &[p("r", 0)],
        multiplier: p("c", 0),
        admissible: always,
        m: |q, c| 11 * q[0] + 10 + c * (12 * q[0] + 11),
        g: |q, c| 6 * (c + 1) * (12 * q[0] + 11),
        im1: |q, _| 2 * (12 * q[0] + 11),
        im2: |_, _| 1,
        m_src: "11r+10+c(12r+11)",
        g_src: "6(c+1)(12r+11)",
        im1_src: "2(12r+11)",
        im2_src: "1",
        side: "",
        congruence: "m = 11r+10 (mod 12r+11)",
    },
    FamilyDescriptor {
        id: "F3.2a",
        params: &[ParamSpec {
            name: "s",
            min: 0,
            filter: Some(not2mod3),
        }],
        multiplier: p("c", 0),
        admissible: always,
        m: |q, c| 5 * q[0] + 3 + c * (8 * q[0] + 5),
        g: |q, c| 2 * (3 * c + 2) * (8 * q[0] + 5),
        im1: |q, _| 8 * q[0] + 5,
        im2: |_, _| 2,
        m_src: "5s+3+c(8s+5)",
        g_src: "2(3c+2)(8s+5)",
        im1_src: "8s+5",
        im2_src: "2",
        side: "s != 2 (mod 3)",
        congruence: "m = 5s+3 (mod 8s+5)",
    },
    FamilyDescriptor {
        id: "F3.2b",
        params: &[p("t", 0)],
        multiplier: p("c", 0),
        admissible: always,
        m: |q, c| 7 * q[0] + 6 + c * (8 * q[0] + 7),
        g: |q, c| 6 * (c + 1) * (8 * q[0] + 7),
        im1: |q, _| 3 * (8 * q[0] + 7),
        im2: |_, _| 2,
        m_src: "7t+6+c(8t+7)",
        g_src: "6(c+1)(8t+7)",
        im1_src: "3(8t+7)",
        im2_src: "2",
        side: "",
        congruence: "m = 7t+6 (mod 8t+7)",
    },
    FamilyDescriptor {
        id: "F3.3a",
        params: &[p("t", 0)],
        multiplier: p("c", 0),
        admissible: always,
        m: |q, c| 22 * q[0] + 9 + 2 * c * (12 * q[0] + 5),
        g: |q, c| 12 * (c + 1) * (12 * q[0] + 5),
        im1: |q, _| 4 * (12 * q[0] + 5),
        im2: |_, _| 3,
        m_src: "22t+9+2c(12t+5)",
        g_src: "12(c+1)(12t+5)",
        im1_src: "4(12t+5)",
        im2_src: "3",
        side: "",
        congruence: "m = 22t+9 (mod 2(12t+5))",
    },
    FamilyDescriptor {
        id: "F3.3b",
        params: &[p("t", 0)],
        multiplier: p("c", 0),
        admissible: always,
        m: |q, c| 22 * q[0] + 20 + 2 * c * (12 * q[0] + 11),
        g: |q, c| 12 * (c + 1) * (12 * q[0] + 11),
        im1: |q, _| 4 * (12 * q[0] + 11),
        im2: |_, _| 3,
        m_src: "22t+20+2c(12t+11)",
        g_src: "12(c+1)(12t+11)",
        im1_src: "4(12t+11)",
        im2_src: "3",
        side: "",
        congruence: "m = 22t+20 (mod 2(12t+11))",
    },
    FamilyDescriptor {
        id: "F3.4a1",
        params: &[p("r", 0)],
        multiplier: p("c", 0),
        admissible: always,
        m: |q, c| 62 * q[0] + 14 + 2 * c * (48 * q[0] + 11),
        g: |q, c| 4 * (3 * c + 2) * (48 * q[0] + 11),
        im1: |q, _| 48 * q[0] + 11,
        im2: |_, _| 4,
        m_src: "62r+14+2c(48r+11)",
        g_src: "4(3c+2)(48r+11)",
        im1_src: "48r+11",
        im2_src: "4",
        side: "",
        congruence: "m = 62r+14 (mod 2(48r+11))",
    },
    FamilyDescriptor {
        id: "F3.4a2",
        params: &[p("r", 0)],
        multiplier: p("c", 0),
        admissible: always,
        m: |q, c| 94 * q[0] + 84 + 2 * c * (48 * q[0] + 43),
        g: |q, c| 12 * (c + 1) * (48 * q[0] + 43),
        im1: |q, _| 48 * q[0] + 43,
        im2: |_, _| 4,
        m_src: "94r+84+2c(48r+43)",
        g_src: "12(c+1)(48r+43)",
        im1_src: "48r+43",
        im2_src: "4",
        side: "",
        congruence: "m = 94r+84 (mod 2(48r+43))",
    },
    FamilyDescriptor {
        id: "F3.4b1",
        params: &[p("t", 0)],
        multiplier: p("c", 0),
        admissible: always,
        m: |q, c| 94 * q[0] + 37 + 2 * c * (48 * q[0] + 19),
        g: |q, c| 12 * (c + 1) * (48 * q[0] + 19),
        im1: |q, _| 48 * q[0] + 19,
        im2: |_, _| 4,
        m_src: "94t+37+2c(48t+19)",
        g_src: "12(c+1)(48t+19)",
        im1_src: "48t+19",
        im2_src: "4",
        side: "",
        congruence: "m = 94t+37 (mod 2(48t+19))",
    },
    FamilyDescriptor {
        id: "F3.4b2",
        params: &[p("t", 0)],
        multiplier: p("c", 0),
        admissible: always,
        m: |q, c| 62 * q[0] + 45 + 2 * c * (48 * q[0] + 35),
        g: |q, c| 4 * (3 * c + 2) * (48 * q[0] + 35),
        im1: |q, _| 48 * q[0] + 35,
        im2: |_, _| 4,
        m_src: "62t+45+2c(48t+35)",
        g_src: "4(3c+2)(48t+35)",
        im1_src: "48t+35",
        im2_src: "4",
        side: "",
        congruence: "m = 62t+45 (mod 2(48t+35))",
    },
    FamilyDescriptor {
        id: "F3.5a",
        params: &[p("t", 0)],
        multiplier: p("d", 0),
        admissible: always,
        m: |q, d| 3 * q[0] + 2 + (5 * d + 4) * (4 * q[0] + 3),
        g: |q, d| 30 * (d + 1) * (4 * q[0] + 3),
        im1: |q, _| 6 * (4 * q[0] + 3),
        im2: |_, _| 5,
        m_src: "3t+2+(5d+4)(4t+3)",
        g_src: "30(d+1)(4t+3)",
        im1_src: "6(4t+3)",
        im2_src: "5",
        side: "",
        congruence: "m = 19t+14 (mod 5(4t+3))",
    },
    FamilyDescriptor {
        id: "F3.5b",
        params: &[ParamSpec {
            name: "s",
            min: 0,
            filter: Some(not2mod3),
        }],
        multiplier: p("d", 0),
        admissible: always,
        m: |q, d| q[0] + (5 * d + 3) * (4 * q[0] + 1),
        g: |q, d| 10 * (3 * d + 2) * (4 * q[0] + 1),
        im1: |q, _| 2 * (4 * q[0] + 1),
        im2: |_, _| 5,
        m_src: "s+(5d+3)(4s+1)",
        g_src: "10(3d+2)(4s+1)",
        im1_src: "2(4s+1)",
        im2_src: "5",
        side: "s != 2 (mod 3)",
        congruence: "m = 13s+3 (mod 5(4s+1))",
    },
    FamilyDescriptor {
        id: "F3.6",
        params: &[p("s", 0)],
        multiplier: p("c", 0),
        admissible: always,
        m: |q, c| 23 * q[0] + 16 + c * (24 * q[0] + 17),
        g: |q, c| 6 * (c + 1) * (24 * q[0] + 17),
        im1: |q, _| 24 * q[0] + 17,
        im2: |_, _| 6,
        m_src: "23s+16+c(24s+17)",
        g_src: "6(c+1)(24s+17)",
        im1_src: "24s+17",
        im2_src: "6",
        side: "",
        congruence: "m = 23s+16 (mod 24s+17)",
    },
    // ---- im1 = 2*(odd), im2 = 1 (mod 4) ----
    FamilyDescriptor {
        id: "F4.1",
        params: &[p("s", 0), p("t", 0)],
        multiplier: p("d", 0),
        admissible: always,
        m: |q, d| 3 * q[0] - q[1] + (16 * q[1] + 3 + d * (24 * q[1] + 5)) * (12 * q[0] + 1),
        g: |q, d| 2 * (3 * d + 2) * (12 * q[0] + 1) * (24 * q[1] + 5),
        im1: |q, _| 2 * (12 * q[0] + 1),
        im2: |q, _| 24 * q[1] + 5,
        m_src: "3s-t+(16t+3+d(24t+5))(12s+1)",
        g_src: "2(3d+2)(12s+1)(24t+5)",
        im1_src: "2(12s+1)",
        im2_src: "24t+5",
        side: "",
        congruence: "m = 3s-t+(16t+3)(12s+1) (mod (12s+1)(24t+5))",
    },
    FamilyDescriptor {
        id: "F4.2",
        params: &[p("s", 0), p("t", 0)],
        multiplier: p("d", 0),
        admissible: always,
        m: |q, d| 7 * q[0] - q[1] + (16 * q[1] + 8 + d * (24 * q[1] + 13)) * (12 * q[0] + 1),
        g: |q, d| 2 * (3 * d + 2) * (12 * q[0] + 1) * (24 * q[1] + 13),
        im1: |q, _| 2 * (12 * q[0] + 1),
        im2: |q, _| 24 * q[1] + 13,
        m_src: "7s-t+(16t+8+d(24t+13))(12s+1)",
        g_src: "2(3d+2)(12s+1)(24t+13)",
        im1_src: "2(12s+1)",
        im2_src: "24t+13",
        side: "",
        congruence: "m = 7s-t+(16t+8)(12s+1) (mod (12s+1)(24t+13))",
    },
    FamilyDescriptor {
        id: "F4.3",
        params: &[p("s", 0), p("t", 0)],
        multiplier: p("d", 1),
        admissible: always,
        m: |q, d| -q[0] - q[1] - 1 + d * (12 * q[0] + 1) * (8 * q[1] + 7),
        g: |q, d| 6 * d * (12 * q[0] + 1) * (8 * q[1] + 7),
        im1: |q, _| 2 * (12 * q[0] + 1),
        im2: |q, _| 3 * (8 * q[1] + 7),
        m_src: "-s-t-1+d(12s+1)(8t+7)",
        g_src: "6d(12s+1)(8t+7)",
        im1_src: "2(12s+1)",
        im2_src: "3(8t+7)",
        side: "d >= 1",
        congruence: "m = -s-t-1 (mod (12s+1)(8t+7))",
    },
    FamilyDescriptor {
        id: "F4.4",
        params: &[p("s", 0), p("t", 0)],
        multiplier: p("d", 0),
        admissible: always,
        m: |q, d| 3 * q[0] - q[1] + 1 + (16 * q[1] + 3 + d * (24 * q[1] + 5)) * (12 * q[0] + 5),
        g: |q, d| 2 * (3 * d + 2) * (12 * q[0] + 5) * (24 * q[1] + 5),
        im1: |q, _| 2 * (12 * q[0] + 5),
        im2: |q, _| 24 * q[1] + 5,
        m_src: "3s-t+1+(16t+3+d(24t+5))(12s+5)",
        g_src: "2(3d+2)(12s+5)(24t+5)",
        im1_src: "2(12s+5)",
        im2_src: "24t+5",
        side: "",
        congruence: "m = 3s-t+1+(16t+3)(12s+5) (mod (12s+5)(24t+5))",
    },
    FamilyDescriptor {
        id: "F4.5",
        params: &[p("s", 0), p("t", 0)],
        multiplier: p("d", 1),
        admissible: always,
        m: |q, d| -q[0] - q[1] - 1 + d * (12 * q[0] + 5) * (24 * q[1] + 13),
        g: |q, d| 6 * d * (12 * q[0] + 5) * (24 * q[1] + 13),
        im1: |q, _| 2 * (12 * q[0] + 5),
        im2: |q, _| 24 * q[1] + 13,
        m_src: "-s-t-1+d(12s+5)(24t+13)",
        g_src: "6d(12s+5)(24t+13)",
        im1_src: "2(12s+5)",
        im2_src: "24t+13",
        side: "d >= 1",
        congruence: "m = -s-t-1 (mod (12s+5)(24t+13))",
    },
    FamilyDescriptor {
        id: "F4.6",
        params: &[p("s", 0), p("t", 0)],
        multiplier: p("d", 0),
        admissible: always,
        m: |q, d| 7 * q[0] - q[1] + 4 + (16 * q[1] + d * (24 * q[1] + 1)) * (12 * q[0] + 7),
        g: |q, d| 2 * (3 * d + 2) * (12 * q[0] + 7) * (24 * q[1] + 1),
        im1: |q, _| 2 * (12 * q[0] + 7),
        im2: |q, _| 24 * q[1] + 1,
        m_src: "7s-t+4+(16t+d(24t+1))(12s+7)",
        g_src: "2(3d+2)(12s+7)(24t+1)",
        im1_src: "2(12s+7)",
        im2_src: "24t+1",
        side: "",
        congruence: "m = 7s-t+4+16t(12s+7) (mod (12s+7)(24t+1))",
    },
    FamilyDescriptor {
        id: "F4.7",
        params: &[p("s", 0), p("t", 0)],
        multiplier: p("d", 1),
        admissible: always,
        m: |q, d| -q[0] - q[1] - 1 + d * (12 * q[0] + 7) * (8 * q[1] + 3),
        g: |q, d| 6 * d * (12 * q[0] + 7) * (8 * q[1] + 3),
        im1: |q, _| 2 * (12 * q[0] + 7),
        im2: |q, _| 3 * (8 * q[1] + 3),
        m_src: "-s-t-1+d(12s+7)(8t+3)",
        g_src: "6d(12s+7)(8t+3)",
        im1_src: "2(12s+7)",
        im2_src: "3(8t+3)",
        side: "d >= 1",
        congruence: "m = -s-t-1 (mod (12s+7)(8t+3))",
    },
    FamilyDescriptor {
        id: "F4.8",
        params: &[p("s", 0), p("t", 0)],
        multiplier: p("d", 0),
        admissible: always,
        m: |q, d| 3 * q[0] + 1 - q[1] + (16 * q[1] + 11 + d * (24 * q[1] + 17)) * (12 * q[0] + 7),
        g: |q, d| 2 * (3 * d + 2) * (12 * q[0] + 7) * (24 * q[1] + 17),
        im1: |q, _| 2 * (12 * q[0] + 7),
        im2: |q, _| 24 * q[1] + 17,
        m_src: "3s+1-t+(16t+11+d(24t+17))(12s+7)",
        g_src: "2(3d+2)(12s+7)(24t+17)",
        im1_src: "2(12s+7)",
        im2_src: "24t+17",
        side: "",
        congruence: "m = 3s+1-t+(16t+11)(12s+7) (mod (12s+7)(24t+17))",
    },
    FamilyDescriptor {
        id: "F4.9",
        params: &[p("s", 0), p("t", 0)],
        multiplier: p("d", 1),
        admissible: always,
        m: |q, d| -q[0] - q[1] - 1 + d * (12 * q[0] + 11) * (24 * q[1] + 1),
        g: |q, d| 6 * d * (12 * q[0] + 11) * (24 * q[1] + 1),
        im1: |q, _| 2 * (12 * q[0] + 11),
        im2: |q, _| 24 * q[1] + 1,
        m_src: "-s-t-1+d(12s+11)(24t+1)",
        g_src: "6d(12s+11)(24t+1)",
        im1_src: "2(12s+11)",
        im2_src: "24t+1",
        side: "d >= 1",
        congruence: "m = -s-t-1 (mod (12s+11)(24t+1))",
    },
    FamilyDescriptor {
        id: "F4.10",
        params: &[p("s", 0), p("t", 0)],
        multiplier: p("d", 0),
        admissible: always,
        m: |q, d| 3 * q[0] - q[1] + 2 + (16 * q[1] + 11 + d * (24 * q[1] + 17)) * (12 * q[0] + 11),
        g: |q, d| 2 * (3 * d + 2) * (12 * q[0] + 11) * (24 * q[1] + 17),
        im1: |q, _| 2 * (12 * q[0] + 11),
        im2: |q, _| 24 * q[1] + 17,
        m_src: "3s-t+2+(16t+11+d(24t+17))(12s+11)",
        g_src: "2(3d+2)(12s+11)(24t+17)",
        im1_src: "2(12s+11)",
        im2_src: "24t+17",
        side: "",
        congruence: "m = 3s-t+2+(16t+11)(12s+11) (mod (12s+11)(24t+17))",
    },
    // ---- im1 = 4j, im2 = 3 (mod 4); even m first, then odd m ----
    FamilyDescriptor {
        id: "F5.1a",
        params: &[
            ParamSpec {
                name: "s",
                min: 0,
                filter: Some(not2mod3),
            },
            p("t", 0),
        ],
        multiplier: p("d", 0),
        admissible: always,
        m: |q, d| 2 * (q[0] - q[1] + (32 * q[1] + 7 + d * (48 * q[1] + 11)) * (4 * q[0] + 1)),
        g: |q, d| 4 * (3 * d + 2) * (4 * q[0] + 1) * (48 * q[1] + 11),
        im1: |q, _| 4 * (4 * q[0] + 1),
        im2: |q, _| 48 * q[1] + 11,
        m_src: "2[s-t+(32t+7+d(48t+11))(4s+1)]",
        g_src: "4(3d+2)(4s+1)(48t+11)",
        im1_src: "4(4s+1)",
        im2_src: "48t+11",
        side: "s != 2 (mod 3)",
        congruence: "m = 2[s-t+(32t+7)(4s+1)] (mod 2(4s+1)(48t+11))",
    },
    FamilyDescriptor {
        id: "F5.1b",
        params: &[p("s1", 0), p("t", 0)],
        multiplier: p("d", 1),
        admissible: always,
        m: |q, d| -2 * q[0] - 2 * q[1] - 2 + 2 * d * (4 * q[0] + 3) * (48 * q[1] + 11),
        g: |q, d| 12 * d * (4 * q[0] + 3) * (48 * q[1] + 11),
        im1: |q, _| 12 * (4 * q[0] + 3),
        im2: |q, _| 48 * q[1] + 11,
        m_src: "-2s1-2t-2+2d(4s1+3)(48t+11)",
        g_src: "12d(4s1+3)(48t+11)",
        im1_src: "12(4s1+3)",
        im2_src: "48t+11",
        side: "d >= 1",
        congruence: "m = -2s1-2t-2 (mod 2(4s1+3)(48t+11))",
    },
    FamilyDescriptor {
        id: "F5.2",
        params: &[p("r", 0), p("t", 0)],
        multiplier: p("d", 1),
        admissible: always,
        m: |q, d| 2 * (-q[0] - q[1] - 1 + d * (12 * q[0] + 1) * (48 * q[1] + 43)),
        g: |q, d| 12 * d * (12 * q[0] + 1) * (48 * q[1] + 43),
        im1: |q, _| 4 * (12 * q[0] + 1),
        im2: |q, _| 48 * q[1] + 43,
        m_src: "2[-r-t-1+d(12r+1)(48t+43)]",
        g_src: "12d(12r+1)(48t+43)",
        im1_src: "4(12r+1)",
        im2_src: "48t+43",
        side: "d >= 1",
        congruence: "m = -2r-2t-2 (mod 2(12r+1)(48t+43))",
    },
    FamilyDescriptor {
        id: "F5.3",
        params: &[p("r", 0), p("t", 0)],
        multiplier: p("d", 0),
        admissible: always,
        m: |q, d| 2 * (7 * q[0] - q[1] + 2 + (32 * q[1] + 28 + d * (48 * q[1] + 43)) * (12 * q[0] + 5)),
        g: |q, d| 4 * (3 * d + 2) * (12 * q[0] + 5) * (48 * q[1] + 43),
        im1: |q, _| 4 * (12 * q[0] + 5),
        im2: |q, _| 48 * q[1] + 43,
        m_src: "2[7r-t+2+(32t+28+d(48t+43))(12r+5)]",
        g_src: "4(3d+2)(12r+5)(48t+43)",
        im1_src: "4(12r+5)",
        im2_src: "48t+43",
        side: "",
        congruence: "m = 2[7r-t+2+(32t+28)(12r+5)] (mod 2(12r+5)(48t+43))",
    },
    FamilyDescriptor {
        id: "F5.4",
        params: &[p("r", 0), p("t", 0)],
        multiplier: p("d", 1),
        admissible: always,
        m: |q, d| 2 * (-q[0] - q[1] - 1 + d * (12 * q[0] + 7) * (48 * q[1] + 19)),
        g: |q, d| 12 * d * (12 * q[0] + 7) * (48 * q[1] + 19),
        im1: |q, _| 4 * (12 * q[0] + 7),
        im2: |q, _| 48 * q[1] + 19,
        m_src: "2[-r-t-1+d(12r+7)(48t+19)]",
        g_src: "12d(12r+7)(48t+19)",
        im1_src: "4(12r+7)",
        im2_src: "48t+19",
        side: "d >= 1",
        congruence: "m = -2r-2t-2 (mod 2(12r+7)(48t+19))",
    },
    FamilyDescriptor {
        id: "F5.5a",
        params: &[p("t", 0)],
        multiplier: p("c", 1),
        admissible: always,
        m: |q, c| 2 * (-q[0] - 1 + c * (48 * q[0] + 35)),
        g: |q, c| 12 * c * (48 * q[0] + 35),
        im1: |_, _| 12,
        im2: |q, _| 48 * q[0] + 35,
        m_src: "2[-t-1+c(48t+35)]",
        g_src: "12c(48t+35)",
        im1_src: "12",
        im2_src: "48t+35",
        side: "c >= 1",
        congruence: "m = -2t-2 (mod 2(48t+35))",
    },
    FamilyDescriptor {
        id: "F5.5b",
        params: &[p("s1", 1), p("t", 0)],
        multiplier: p("d", 1),
        admissible: always,
        m: |q, d| 2 * (-q[0] - q[1] - 1 + d * (4 * q[0] + 1) * (48 * q[1] + 35)),
        g: |q, d| 12 * d * (4 * q[0] + 1) * (48 * q[1] + 35),
        im1: |q, _| 12 * (4 * q[0] + 1),
        im2: |q, _| 48 * q[1] + 35,
        m_src: "2[-s1-t-1+d(4s1+1)(48t+35)]",
        g_src: "12d(4s1+1)(48t+35)",
        im1_src: "12(4s1+1)",
        im2_src: "48t+35",
        side: "s1 >= 1, d >= 1",
        congruence: "m = -2s1-2t-2 (mod 2(4s1+1)(48t+35))",
    },
    FamilyDescriptor {
        id: "F5.5c",
        params: &[
            ParamSpec {
                name: "s",
                min: 0,
                filter: Some(not0mod3),
            },
            p("t", 0),
        ],
        multiplier: p("d", 0),
        admissible: always,
        m: |q, d| 2 * (q[0] - q[1] + (32 * q[1] + 23 + d * (48 * q[1] + 35)) * (4 * q[0] + 3)),
        g: |q, d| 4 * (3 * d + 2) * (4 * q[0] + 3) * (48 * q[1] + 35),
        im1: |q, _| 4 * (4 * q[0] + 3),
        im2: |q, _| 48 * q[1] + 35,
        m_src: "2[s-t+(32t+23+d(48t+35))(4s+3)]",
        g_src: "4(3d+2)(4s+3)(48t+35)",
        im1_src: "4(4s+3)",
        im2_src: "48t+35",
        side: "s != 0 (mod 3)",
        congruence: "m = 2[s-t+(32t+23)(4s+3)] (mod 2(4s+3)(48t+35))",
    },
    FamilyDescriptor {
        id: "F5.6",
        params: &[p("r", 0), p("t", 0)],
        multiplier: p("d", 0),
        admissible: always,
        m: |q, d| 2 * (7 * q[0] - q[1] + 6 + (32 * q[1] + 12 + d * (48 * q[1] + 19)) * (12 * q[0] + 11)),
        g: |q, d| 4 * (3 * d + 2) * (12 * q[0] + 11) * (48 * q[1] + 19),
        im1: |q, _| 4 * (12 * q[0] + 11),
        im2: |q, _| 48 * q[1] + 19,
        m_src: "2[7r-t+6+(32t+12+d(48t+19))(12r+11)]",
        g_src: "4(3d+2)(12r+11)(48t+19)",
        im1_src: "4(12r+11)",
        im2_src: "48t+19",
        side: "",
        congruence: "m = 2[7r-t+6+(32t+12)(12r+11)] (mod 2(12r+11)(48t+19))",
    },
    FamilyDescriptor {
        id: "F5.7",
        params: &[p("r", 0), p("t", 0)],
        multiplier: p("d", 1),
        admissible: always,
        m: |q, d| 2 * (-q[0] - q[1] - 1 + d * (12 * q[0] + 1) * (48 * q[1] + 19)) + 1,
        g: |q, d| 12 * d * (12 * q[0] + 1) * (48 * q[1] + 19),
        im1: |q, _| 4 * (12 * q[0] + 1),
        im2: |q, _| 48 * q[1] + 19,
        m_src: "2[-r-t-1+d(12r+1)(48t+19)]+1",
        g_src: "12d(12r+1)(48t+19)",
        im1_src: "4(12r+1)",
        im2_src: "48t+19",
        side: "d >= 1",
        congruence: "m = -2r-2t-1 (mod 2(12r+1)(48t+19))",
    },
    FamilyDescriptor {
        id: "F5.8",
        params: &[p("r", 0), p("t", 0)],
        multiplier: p("d", 0),
        admissible: always,
        m: |q, d| 2 * (7 * q[0] - q[1] + 2 + (32 * q[1] + 12 + d * (48 * q[1] + 19)) * (12 * q[0] + 5)) + 1,
        g: |q, d| 4 * (3 * d + 2) * (12 * q[0] + 5) * (48 * q[1] + 19),
        im1: |q, _| 4 * (12 * q[0] + 5),
        im2: |q, _| 48 * q[1] + 19,
        m_src: "2[7r-t+2+(32t+12+d(48t+19))(12r+5)]+1",
        g_src: "4(3d+2)(12r+5)(48t+19)",
        im1_src: "4(12r+5)",
        im2_src: "48t+19",
        side: "",
        congruence: "m = 2[7r-t+2+(32t+12)(12r+5)]+1 (mod 2(12r+5)(48t+19))",
    },
    FamilyDescriptor {
        id: "F5.9",
        params: &[p("s", 0), p("t", 0)],
        multiplier: p("d", 0),
        admissible: always,
        m: |q, d| 2 * (q[0] - q[1] - 1 + (32 * q[1] + 23 + d * (48 * q[1] + 35)) * (4 * q[0] + 1)) + 1,
        g: |q, d| 4 * (3 * d + 2) * (4 * q[0] + 1) * (48 * q[1] + 35),
        im1: |q, _| 4 * (4 * q[0] + 1),
        im2: |q, _| 48 * q[1] + 35,
        m_src: "2[s-t-1+(32t+23+d(48t+35))(4s+1)]+1",
        g_src: "4(3d+2)(4s+1)(48t+35)",
        im1_src: "4(4s+1)",
        im2_src: "48t+35",
        side: "",
        congruence: "m = 2[s-t-1+(32t+23)(4s+1)]+1 (mod 2(4s+1)(48t+35))",
    },
    FamilyDescriptor {
        id: "F5.10a",
        params: &[p("t", 0)],
        multiplier: p("c", 1),
        admissible: always,
        m: |q, c| 2 * (-q[0] - 1 + c * (48 * q[0] + 11)) + 1,
        g: |q, c| 12 * c * (48 * q[0] + 11),
        im1: |_, _| 12,
        im2: |q, _| 48 * q[0] + 11,
        m_src: "2[-t-1+c(48t+11)]+1",
        g_src: "12c(48t+11)",
        im1_src: "12",
        im2_src: "48t+11",
        side: "c >= 1",
        congruence: "m = -2t-1 (mod 2(48t+11))",
    },
    FamilyDescriptor {
        id: "F5.10b",
        params: &[p("s1", 1), p("t", 0)],
        multiplier: p("d", 1),
        admissible: always,
        m: |q, d| 2 * (-q[0] - q[1] - 1 + d * (4 * q[0] + 1) * (48 * q[1] + 11)) + 1,
        g: |q, d| 12 * d * (4 * q[0] + 1) * (48 * q[1] + 11),
        im1: |q, _| 12 * (4 * q[0] + 1),
        im2: |q, _| 48 * q[1] + 11,
        m_src: "2[-s1-t-1+d(4s1+1)(48t+11)]+1",
        g_src: "12d(4s1+1)(48t+11)",
        im1_src: "12(4s1+1)",
        im2_src: "48t+11",
        side: "s1 >= 1, d >= 1",
        congruence: "m = -2s1-2t-1 (mod 2(4s1+1)(48t+11))",
    },
    FamilyDescriptor {
        id: "F5.10c",
        params: &[
            ParamSpec {
                name: "s",
                min: 0,
                filter: Some(not0mod3),
            },
            p("t", 0),
        ],
        multiplier: p("d", 0),
        admissible: always,
        m: |q, d| 2 * (q[0] - q[1] + (32 * q[1] + 7 + d * (48 * q[1] + 11)) * (4 * q[0] + 3)) + 1,
        g: |q, d| 4 * (3 * d + 2) * (4 * q[0] + 3) * (48 * q[1] + 11),
        im1: |q, _| 4 * (4 * q[0] + 3),
        im2: |q, _| 48 * q[1] + 11,
        m_src: "2[s-t+(32t+7+d(48t+11))(4s+3)]+1",
        g_src: "4(3d+2)(4s+3)(48t+11)",
        im1_src: "4(4s+3)",
        im2_src: "48t+11",
        side: "s != 0 (mod 3)",
        congruence: "m = 2[s-t+(32t+7)(4s+3)]+1 (mod 2(4s+3)(48t+11))",
    },
    FamilyDescriptor {
        id: "F5.11",
        params: &[p("r", 0), p("t", 0)],
        multiplier: p("d", 1),
        admissible: always,
        m: |q, d| 2 * (-q[0] - q[1] - 2 + d * (12 * q[0] + 7) * (48 * q[1] + 43)) + 1,
        g: |q, d| 12 * d * (12 * q[0] + 7) * (48 * q[1] + 43),
        im1: |q, _| 4 * (12 * q[0] + 7),
        im2: |q, _| 48 * q[1] + 43,
        m_src: "2[-r-t-2+d(12r+7)(48t+43)]+1",
        g_src: "12d(12r+7)(48t+43)",
        im1_src: "4(12r+7)",
        im2_src: "48t+43",
        side: "d >= 1",
        congruence: "m = -2r-2t-3 (mod 2(12r+7)(48t+43))",
    },
    FamilyDescriptor {
        id: "F5.12",
        params: &[p("r", 0), p("t", 0)],
        multiplier: p("d", 0),
        admissible: always,
        m: |q, d| 2 * (7 * q[0] - q[1] + 5 + (32 * q[1] + 28 + d * (48 * q[1] + 43)) * (12 * q[0] + 11)) + 1,
        g: |q, d| 4 * (3 * d + 2) * (12 * q[0] + 11) * (48 * q[1] + 43),
        im1: |q, _| 4 * (12 * q[0] + 11),
        im2: |q, _| 48 * q[1] + 43,
        m_src: "2[7r-t+5+(32t+28+d(48t+43))(12r+11)]+1",
        g_src: "4(3d+2)(12r+11)(48t+43)",
        im1_src: "4(12r+11)",
        im2_src: "48t+43",
        side: "",
        congruence: "m = 2[7r-t+5+(32t+28)(12r+11)]+1 (mod 2(12r+11)(48t+43))",
    },
    // ---- power-of-two summand ----
    FamilyDescriptor {
        id: "F6.1",
        params: &[p("i", 1)],
        multiplier: p("c", 0),
        admissible: always,
        m: |q, c| 2 * (p2(2 * q[0]) - 1) / 3 + (19 + 20 * c) * p2(2 * q[0]),
        g: |q, c| 15 * (c + 1) * p2(2 * q[0] + 3),
        im1: |q, _| p2(2 * q[0] + 3),
        im2: |_, _| 15,
        m_src: "2(4^i-1)/3+(19+20c)*4^i",
        g_src: "15(c+1)*2^(2i+3)",
        im1_src: "2^(2i+3)",
        im2_src: "15",
        side: "i >= 1",
        congruence: "m = 2(4^i-1)/3+19*4^i (mod 20*4^i)",
    },
    FamilyDescriptor {
        id: "F6.2",
        params: &[p("r", 1)],
        multiplier: p("c", 0),
        admissible: always,
        m: |q, c| p2(q[0] - 1) - 2 + (31 + 47 * c) * p2(q[0] + 1),
        g: |q, c| 47 * (3 * c + 2) * p2(q[0] + 2),
        im1: |q, _| p2(q[0] + 2),
        im2: |_, _| 47,
        m_src: "2^(r-1)-2+(31+47c)*2^(r+1)",
        g_src: "47(3c+2)*2^(r+2)",
        im1_src: "2^(r+2)",
        im2_src: "47",
        side: "r >= 1",
        congruence: "m = 2^(r-1)-2+31*2^(r+1) (mod 47*2^(r+1))",
    },
    FamilyDescriptor {
        id: "F6.3",
        params: &[p("r", 1)],
        multiplier: p("c", 1),
        admissible: |q, c| (2 * c * (p2(q[0] + 3) - 1)) % 3 == 0,
        m: |q, c| -p2(q[0] - 1) + 2 * c * (p2(q[0] + 3) - 1) * p2(q[0]) / 3,
        g: |q, c| c * (p2(q[0] + 3) - 1) * p2(q[0] + 2),
        im1: |q, _| p2(q[0] + 2),
        im2: |q, _| p2(q[0] + 3) - 1,
        m_src: "-2^(r-1)+2c(2^(r+3)-1)*2^r/3",
        g_src: "c(2^(r+3)-1)*2^(r+2)",
        im1_src: "2^(r+2)",
        im2_src: "2^(r+3)-1",
        side: "r >= 1, c >= 1, 3 | 2c(2^(r+3)-1)",
        congruence: "m on the progression of admissible c in -2^(r-1)+2c(2^(r+3)-1)*2^r/3",
    },
    FamilyDescriptor {
        id: "F6.4",
        params: &[p("r", 1)],
        multiplier: p("c", 1),
        admissible: |q, c| (c * (p2(q[0] + 4) - 1) - 1) % 3 == 0,
        m: |q, c| p2(q[0] - 1) + (c * (p2(q[0] + 4) - 1) - 1) * p2(q[0] + 2) / 3,
        g: |q, c| c * (p2(q[0] + 4) - 1) * p2(q[0] + 3),
        im1: |q, _| p2(q[0] + 2),
        im2: |q, _| p2(q[0] + 4) - 1,
        m_src: "2^(r-1)+[c(2^(r+4)-1)-1]*2^(r+2)/3",
        g_src: "c(2^(r+4)-1)*2^(r+3)",
        im1_src: "2^(r+2)",
        im2_src: "2^(r+4)-1",
        side: "r >= 1, c >= 1, 3 | c(2^(r+4)-1)-1",
        congruence: "m on the progression of admissible c in 2^(r-1)+[c(2^(r+4)-1)-1]*2^(r+2)/3",
    },
    FamilyDescriptor {
        id: "F6.5",
        params: &[p("r", 1)],
        multiplier: p("c", 1),
        admissible: |q, c| (c * (p2(q[0] + 3) - 1)) % 3 == 0,
        m: |q, c| -p2(q[0] - 1) + c * (p2(q[0] + 3) - 1) * p2(q[0] + 1) / 3,
        g: |q, c| c * (p2(q[0] + 3) - 1) * p2(q[0] + 2),
        im1: |q, _| p2(q[0] + 2),
        im2: |q, _| p2(q[0] + 3) - 1,
        m_src: "-2^(r-1)+c(2^(r+3)-1)*2^(r+1)/3",
        g_src: "c(2^(r+3)-1)*2^(r+2)",
        im1_src: "2^(r+2)",
        im2_src: "2^(r+3)-1",
        side: "r >= 1, c >= 1, 3 | c(2^(r+3)-1)",
        congruence: "m on the progression of admissible c in -2^(r-1)+c(2^(r+3)-1)*2^(r+1)/3",
    },
    FamilyDescriptor {
        id: "F6.6",
        params: &[p("r", 0)],
        multiplier: p("c", 1),
        admissible: |q, c| (c * (5 * p2(q[0] + 2) - 1)) % 3 == 0,
        m: |q, c| -p2(q[0]) + c * (5 * p2(q[0] + 2) - 1) * p2(q[0] + 1) / 3,
        g: |q, c| c * (5 * p2(q[0] + 2) - 1) * p2(q[0] + 2),
        im1: |q, _| p2(q[0] + 2),
        im2: |q, _| 5 * p2(q[0] + 2) - 1,
        m_src: "-2^r+c(5*2^(r+2)-1)*2^(r+1)/3",
        g_src: "c(5*2^(r+2)-1)*2^(r+2)",
        im1_src: "2^(r+2)",
        im2_src: "5*2^(r+2)-1",
        side: "c >= 1, 3 | c(5*2^(r+2)-1)",
        congruence: "m on the progression of admissible c in -2^r+c(5*2^(r+2)-1)*2^(r+1)/3",
    },
    FamilyDescriptor {
        id: "F6.7",
        params: &[p("r", 1)],
        multiplier: p("c", 1),
        admissible: |q, c| (2 * c * (7 * p2(q[0] + 3) - 1)) % 3 == 0,
        m: |q, c| -5 * p2(q[0] - 1) + 2 * c * (7 * p2(q[0] + 3) - 1) * p2(q[0]) / 3,
        g: |q, c| c * (7 * p2(q[0] + 3) - 1) * p2(q[0] + 2),
        im1: |q, _| p2(q[0] + 2),
        im2: |q, _| 7 * p2(q[0] + 3) - 1,
        m_src: "-5*2^(r-1)+2c(7*2^(r+3)-1)*2^r/3",
        g_src: "c(7*2^(r+3)-1)*2^(r+2)",
        im1_src: "2^(r+2)",
        im2_src: "7*2^(r+3)-1",
        side: "r >= 1, c >= 1, 3 | 2c(7*2^(r+3)-1)",
        congruence: "m on the progression of admissible c in -5*2^(r-1)+2c(7*2^(r+3)-1)*2^r/3",
    },
    FamilyDescriptor {
        id: "F6.8",
        params: &[p("r", 0)],
        multiplier: p("c", 1),
        admissible: |q, c| (c * (9 * p2(q[0] + 2) - 1) - 1) % 3 == 0,
        m: |q, c| p2(q[0]) + (c * (9 * p2(q[0] + 2) - 1) - 1) * p2(q[0] + 3) / 3,
        g: |q, c| c * (9 * p2(q[0] + 2) - 1) * p2(q[0] + 4),
        im1: |q, _| p2(q[0] + 2),
        im2: |q, _| 9 * p2(q[0] + 2) - 1,
        m_src: "2^r+[c(9*2^(r+2)-1)-1]*2^(r+3)/3",
        g_src: "c(9*2^(r+2)-1)*2^(r+4)",
        im1_src: "2^(r+2)",
        im2_src: "9*2^(r+2)-1",
        side: "c >= 1, 3 | c(9*2^(r+2)-1)-1",
        congruence: "m on the progression of admissible c in 2^r+[c(9*2^(r+2)-1)-1]*2^(r+3)/3",
    },
    FamilyDescriptor {
        id: "F6.9",
        params: &[p("r", 0)],
        multiplier: p("c", 1),
        admissible: |q, c| (c * (13 * p2(q[0] + 2) - 1) - 5) % 30 == 0,
        m: |q, c| p2(q[0]) + 5 * ((c * (13 * p2(q[0] + 2) - 1) - 5) / 30) * p2(q[0] + 2),
        g: |q, c| c * (13 * p2(q[0] + 2) - 1) * p2(q[0] + 2),
        im1: |q, _| p2(q[0] + 2),
        im2: |q, _| 13 * p2(q[0] + 2) - 1,
        m_src: "2^r+5*[(c(13*2^(r+2)-1)-5)/30]*2^(r+2)",
        g_src: "c(13*2^(r+2)-1)*2^(r+2)",
        im1_src: "2^(r+2)",
        im2_src: "13*2^(r+2)-1",
        side: "c >= 1, 30 | c(13*2^(r+2)-1)-5",
        congruence: "m on the progression of admissible c in 2^r+5*[(c(13*2^(r+2)-1)-5)/30]*2^(r+2)",
    },
    FamilyDescriptor {
        id: "F6.10",
        params: &[p("r", 2)],
        multiplier: p("c", 1),
        admissible: |q, c| (c * (19 * p2(q[0] + 1) - 1) - 3) % 6 == 0,
        m: |q, c| p2(q[0] - 2) + ((c * (19 * p2(q[0] + 1) - 1) - 3) / 6) * p2(q[0] + 2),
        g: |q, c| c * (19 * p2(q[0] + 1) - 1) * p2(q[0] + 2),
        im1: |q, _| p2(q[0] + 2),
        im2: |q, _| 19 * p2(q[0] + 1) - 1,
        m_src: "2^(r-2)+[(c(19*2^(r+1)-1)-3)/6]*2^(r+2)",
        g_src: "c(19*2^(r+1)-1)*2^(r+2)",
        im1_src: "2^(r+2)",
        im2_src: "19*2^(r+1)-1",
        side: "r >= 2, c >= 1, 6 | c(19*2^(r+1)-1)-3",
        congruence: "m on the progression of admissible c in 2^(r-2)+[(c(19*2^(r+1)-1)-3)/6]*2^(r+2)",
    },
    FamilyDescriptor {
        id: "F6.11",
        params: &[p("r", 0)],
        multiplier: p("c", 1),
        admissible: |q, c| (c * (3 * p2(q[0] + 3) - 1) - 1) % 3 == 0,
        m: |q, c| p2(q[0]) + (c * (3 * p2(q[0] + 3) - 1) - 1) * p2(q[0] + 3) / 3,
        g: |q, c| c * (3 * p2(q[0] + 3) - 1) * p2(q[0] + 4),
        im1: |q, _| p2(q[0] + 4),
        im2: |q, _| 3 * p2(q[0] + 3) - 1,
        m_src: "2^r+[c(3*2^(r+3)-1)-1]*2^(r+3)/3",
        g_src: "c(3*2^(r+3)-1)*2^(r+4)",
        im1_src: "2^(r+4)",
        im2_src: "3*2^(r+3)-1",
        side: "c >= 1, 3 | c(3*2^(r+3)-1)-1",
        congruence: "m on the progression of admissible c in 2^r+[c(3*2^(r+3)-1)-1]*2^(r+3)/3",
    },
    FamilyDescriptor {
        id: "F6.12",
        params: &[p("r", 2)],
        multiplier: p("c", 1),
        admissible: |q, c| (c * (11 * p2(q[0] + 1) - 1) - 1) % 3 == 0,
        m: |q, c| p2(q[0] - 2) + (c * (11 * p2(q[0] + 1) - 1) - 1) * p2(q[0] + 2) / 3,
        g: |q, c| c * (11 * p2(q[0] + 1) - 1) * p2(q[0] + 3),
        im1: |q, _| p2(q[0] + 2),
        im2: |q, _| 11 * p2(q[0] + 1) - 1,
        m_src: "2^(r-2)+[c(11*2^(r+1)-1)-1]*2^(r+2)/3",
        g_src: "c(11*2^(r+1)-1)*2^(r+3)",
        im1_src: "2^(r+2)",
        im2_src: "11*2^(r+1)-1",
        side: "r >= 2, c >= 1, 3 | c(11*2^(r+1)-1)-1",
        congruence: "m on the progression of admissible c in 2^(r-2)+[c(11*2^(r+1)-1)-1]*2^(r+2)/3",
    },
    FamilyDescriptor {
        id: "F6.13",
        params: &[p("r", 0)],
        multiplier: p("c", 1),
        admissible: |q, c| (c * (23 * p2(q[0] + 2) - 1)) % 3 == 0,
        m: |q, c| -p2(q[0] + 2) + c * (23 * p2(q[0] + 2) - 1) * p2(q[0] + 3) / 3,
        g: |q, c| c * (23 * p2(q[0] + 2) - 1) * p2(q[0] + 4),
        im1: |q, _| p2(q[0] + 2),
        im2: |q, _| 23 * p2(q[0] + 2) - 1,
        m_src: "-2^(r+2)+c(23*2^(r+2)-1)*2^(r+3)/3",
        g_src: "c(23*2^(r+2)-1)*2^(r+4)",
        im1_src: "2^(r+2)",
        im2_src: "23*2^(r+2)-1",
        side: "c >= 1, 3 | c(23*2^(r+2)-1)",
        congruence: "m on the progression of admissible c in -2^(r+2)+c(23*2^(r+2)-1)*2^(r+3)/3",
    },
];
