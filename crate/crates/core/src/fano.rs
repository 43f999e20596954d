//! Octonion basis multiplication derived from the seven oriented lines of
//! the Fano plane.
//!
//! Only the oriented triples are stored. The full signed 8×8 table is
//! derived from them at compile time: along each line `(p, q, r)` the units
//! multiply like `(i, j, k)`, so `pq = r`, `qr = p`, `rp = q`, and reversing
//! an order flips the sign. Every imaginary unit squares to `−1`.

use std::fmt;

/// Basis elements of 𝕆 in canonical order `(1, i, j, k, l, il, jl, kl)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Unit {
    One = 0,
    I = 1,
    J = 2,
    K = 3,
    L = 4,
    IL = 5,
    JL = 6,
    KL = 7,
}

impl Unit {
    pub const ALL: [Unit; 8] = [
        Unit::One,
        Unit::I,
        Unit::J,
        Unit::K,
        Unit::L,
        Unit::IL,
        Unit::JL,
        Unit::KL,
    ];

    pub const fn index(self) -> usize {
        self as usize
    }

    pub const fn from_index(idx: usize) -> Unit {
        Self::ALL[idx]
    }

    /// Symbol used by the literal syntax; `"1"` for the identity.
    pub const fn symbol(self) -> &'static str {
        match self {
            Unit::One => "1",
            Unit::I => "i",
            Unit::J => "j",
            Unit::K => "k",
            Unit::L => "l",
            Unit::IL => "il",
            Unit::JL => "jl",
            Unit::KL => "kl",
        }
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// `±unit`, one entry of the basis product table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedUnit {
    pub negative: bool,
    pub unit: Unit,
}

impl SignedUnit {
    pub const fn pos(unit: Unit) -> Self {
        Self { negative: false, unit }
    }

    pub const fn neg(unit: Unit) -> Self {
        Self { negative: true, unit }
    }

    pub const fn sign(self) -> f64 {
        if self.negative {
            -1.0
        } else {
            1.0
        }
    }
}

impl fmt::Display for SignedUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.negative { '-' } else { '+' };
        write!(f, "{s}{}", self.unit)
    }
}

/// Oriented quaternionic triples. Orientation is pinned by `ij = k`,
/// `(ij)l = kl`, `i(jl) = −kl` and `l² = −1`; the Cayley–Dickson product in
/// [`crate::octonion`] must reproduce the derived table exactly.
pub const LINES: [[Unit; 3]; 7] = [
    [Unit::I, Unit::J, Unit::K],
    [Unit::I, Unit::L, Unit::IL],
    [Unit::I, Unit::KL, Unit::JL],
    [Unit::J, Unit::L, Unit::JL],
    [Unit::J, Unit::IL, Unit::KL],
    [Unit::K, Unit::L, Unit::KL],
    [Unit::K, Unit::JL, Unit::IL],
];

/// `TABLE[a][b]` is the product `e_a · e_b` of basis units.
pub const TABLE: [[SignedUnit; 8]; 8] = derive_table(&LINES);

const fn derive_table(lines: &[[Unit; 3]; 7]) -> [[SignedUnit; 8]; 8] {
    let mut t = [[SignedUnit::pos(Unit::One); 8]; 8];
    let mut filled = [[false; 8]; 8];

    let mut a = 0;
    while a < 8 {
        t[0][a] = SignedUnit::pos(Unit::from_index(a));
        t[a][0] = SignedUnit::pos(Unit::from_index(a));
        filled[0][a] = true;
        filled[a][0] = true;
        if a > 0 {
            t[a][a] = SignedUnit::neg(Unit::One);
            filled[a][a] = true;
        }
        a += 1;
    }

    let mut n = 0;
    while n < lines.len() {
        let line = lines[n];
        let mut rot = 0;
        while rot < 3 {
            let p = line[rot].index();
            let q = line[(rot + 1) % 3].index();
            let r = line[(rot + 2) % 3];
            if filled[p][q] || filled[q][p] {
                panic!("Fano lines share a pair of units");
            }
            t[p][q] = SignedUnit::pos(r);
            t[q][p] = SignedUnit::neg(r);
            filled[p][q] = true;
            filled[q][p] = true;
            rot += 1;
        }
        n += 1;
    }

    let mut a = 0;
    while a < 8 {
        let mut b = 0;
        while b < 8 {
            if !filled[a][b] {
                panic!("Fano lines do not cover every pair of units");
            }
            b += 1;
        }
        a += 1;
    }
    t
}

/// Product of two basis units.
pub const fn basis_mul(a: Unit, b: Unit) -> SignedUnit {
    TABLE[a.index()][b.index()]
}
