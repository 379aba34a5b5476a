//! The Magic Square game.
//!
//! Each party answers three bits. Alice's row must have even parity, Bob's
//! column odd parity, and Alice's bit `y` must equal Bob's bit `x`.
//!
//! Two output encodings are supported:
//!
//! * [`MagicSquareEncoding::Full8`]: all eight bit-triples, `out = 4·t₀ + 2·t₁ + t₂`;
//!   the local parities are part of the winning condition.
//! * [`MagicSquareEncoding::Restricted4`]: both parties keep their own parity,
//!   so only `code = 2·t₀ + t₁` is transmitted and `t₂` is completed
//!   (`t₂ = t₀ ⊕ t₁` for Alice, `t₀ ⊕ t₁ ⊕ 1` for Bob).

use serde::{Deserialize, Serialize};

use super::{DeterministicStrategy, GameRelation, Scenario};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MagicSquareEncoding {
    Full8,
    Restricted4,
}

impl MagicSquareEncoding {
    pub fn outputs(self) -> usize {
        match self {
            MagicSquareEncoding::Full8 => 8,
            MagicSquareEncoding::Restricted4 => 4,
        }
    }

    pub fn scenario(self) -> Scenario {
        Scenario::symmetric(3, self.outputs()).expect("valid scenario")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Party {
    Alice,
    Bob,
}

impl Party {
    /// Required `t₀ ⊕ t₁ ⊕ t₂`.
    pub fn parity(self) -> u8 {
        match self {
            Party::Alice => 0,
            Party::Bob => 1,
        }
    }
}

/// Three output bits satisfying their party's parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TripleOutcome {
    bits: [u8; 3],
    party: Party,
}

impl TripleOutcome {
    pub fn from_bits(bits: [u8; 3], party: Party) -> Result<Self> {
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::OutOfRange(format!("{bits:?} are not bits")));
        }
        if bits[0] ^ bits[1] ^ bits[2] != party.parity() {
            return Err(Error::ParityViolation(format!(
                "{bits:?} has the wrong parity for {party:?}"
            )));
        }
        Ok(TripleOutcome { bits, party })
    }

    /// Decodes `code = 2·t₀ + t₁` and completes `t₂`.
    pub fn from_code(code: usize, party: Party) -> Result<Self> {
        if code > 3 {
            return Err(Error::OutOfRange(format!("outcome code {code} > 3")));
        }
        Ok(Self::complete((code >> 1) as u8, (code & 1) as u8, party))
    }

    /// `(t₀, t₁)` with `t₂` set from the party's parity.
    pub fn complete(t0: u8, t1: u8, party: Party) -> Self {
        let (t0, t1) = (t0 & 1, t1 & 1);
        TripleOutcome {
            bits: [t0, t1, t0 ^ t1 ^ party.parity()],
            party,
        }
    }

    pub fn bits(&self) -> [u8; 3] {
        self.bits
    }

    pub fn bit(&self, i: usize) -> u8 {
        self.bits[i]
    }

    pub fn party(&self) -> Party {
        self.party
    }

    pub fn code(&self) -> usize {
        2 * self.bits[0] as usize + self.bits[1] as usize
    }

    /// Output label in the eight-outcome encoding.
    pub fn full8_code(&self) -> usize {
        raw_code(self.bits)
    }

    pub fn encode(&self, encoding: MagicSquareEncoding) -> usize {
        match encoding {
            MagicSquareEncoding::Full8 => self.full8_code(),
            MagicSquareEncoding::Restricted4 => self.code(),
        }
    }
}

/// `4·t₀ + 2·t₁ + t₂`.
pub(crate) fn raw_code(bits: [u8; 3]) -> usize {
    4 * bits[0] as usize + 2 * bits[1] as usize + bits[2] as usize
}

pub(crate) fn raw_bits(out: usize) -> [u8; 3] {
    [((out >> 2) & 1) as u8, ((out >> 1) & 1) as u8, (out & 1) as u8]
}

fn parity(bits: [u8; 3]) -> u8 {
    bits[0] ^ bits[1] ^ bits[2]
}

pub fn magic_square_game(encoding: MagicSquareEncoding) -> GameRelation {
    let scenario = encoding.scenario();
    match encoding {
        MagicSquareEncoding::Full8 => GameRelation::from_predicate(scenario, |x, y, a, b| {
            let (a, b) = (raw_bits(a), raw_bits(b));
            parity(a) == Party::Alice.parity() && parity(b) == Party::Bob.parity() && a[y] == b[x]
        }),
        MagicSquareEncoding::Restricted4 => GameRelation::from_predicate(scenario, |x, y, a, b| {
            let a = TripleOutcome::complete((a >> 1) as u8, (a & 1) as u8, Party::Alice);
            let b = TripleOutcome::complete((b >> 1) as u8, (b & 1) as u8, Party::Bob);
            a.bit(y) == b.bit(x)
        }),
    }
}

/// A shared 3×3 table of bits `c[x][y]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct MagicSquareTable {
    cells: [[u8; 3]; 3],
}

impl MagicSquareTable {
    pub fn new(cells: [[u8; 3]; 3]) -> Result<Self> {
        if cells.iter().flatten().any(|&c| c > 1) {
            return Err(Error::OutOfRange(format!("{cells:?} contains a non-bit")));
        }
        Ok(MagicSquareTable { cells })
    }

    /// Table number `index ∈ 0..512`, row-major, `c₀₀` most significant.
    pub fn from_index(index: u16) -> Self {
        let mut cells = [[0u8; 3]; 3];
        for (k, cell) in cells.iter_mut().flatten().enumerate() {
            *cell = ((index >> (8 - k)) & 1) as u8;
        }
        MagicSquareTable { cells }
    }

    /// The table with four free bits `c₀₀, c₀₁, c₁₀, c₁₁`, the rest of the
    /// first two rows and columns completed by parity and `corner` in `c₂₂`.
    pub fn from_free_bits(c00: u8, c01: u8, c10: u8, c11: u8, corner: u8) -> Self {
        let (c00, c01, c10, c11) = (c00 & 1, c01 & 1, c10 & 1, c11 & 1);
        MagicSquareTable {
            cells: [
                [c00, c01, c00 ^ c01],
                [c10, c11, c10 ^ c11],
                [c00 ^ c10 ^ 1, c01 ^ c11 ^ 1, corner & 1],
            ],
        }
    }

    pub fn cell(&self, x: usize, y: usize) -> u8 {
        self.cells[x][y]
    }

    pub fn row(&self, x: usize) -> [u8; 3] {
        self.cells[x]
    }

    pub fn column(&self, y: usize) -> [u8; 3] {
        [self.cells[0][y], self.cells[1][y], self.cells[2][y]]
    }

    /// Ok iff every row is even and every column odd. No table passes:
    /// the rows force an even total and the columns an odd one.
    pub fn check_parities(&self) -> Result<()> {
        for x in 0..3 {
            if parity(self.row(x)) != Party::Alice.parity() {
                return Err(Error::ParityViolation(format!("row {x} has odd parity")));
            }
        }
        for y in 0..3 {
            if parity(self.column(y)) != Party::Bob.parity() {
                return Err(Error::ParityViolation(format!("column {y} has even parity")));
            }
        }
        Ok(())
    }
}

/// Alice answers row `x`, Bob column `y`, each completing the third bit of
/// their answer by their own parity: only `c[x][0], c[x][1]` and
/// `c[0][y], c[1][y]` are read.
pub fn table_to_strategy(
    table: &MagicSquareTable,
    encoding: MagicSquareEncoding,
) -> DeterministicStrategy {
    let a_map = (0..3)
        .map(|x| {
            let row = table.row(x);
            TripleOutcome::complete(row[0], row[1], Party::Alice).encode(encoding)
        })
        .collect();
    let b_map = (0..3)
        .map(|y| {
            let col = table.column(y);
            TripleOutcome::complete(col[0], col[1], Party::Bob).encode(encoding)
        })
        .collect();
    DeterministicStrategy::new(a_map, b_map)
}

/// Reads rows and columns verbatim. In the eight-outcome encoding any table
/// is accepted; in the four-outcome encoding every row must be even and
/// every column odd, which no table satisfies.
pub fn literal_table_strategy(
    table: &MagicSquareTable,
    encoding: MagicSquareEncoding,
) -> Result<DeterministicStrategy> {
    match encoding {
        MagicSquareEncoding::Full8 => Ok(DeterministicStrategy::new(
            (0..3).map(|x| raw_code(table.row(x))).collect(),
            (0..3).map(|y| raw_code(table.column(y))).collect(),
        )),
        MagicSquareEncoding::Restricted4 => {
            table.check_parities()?;
            Ok(table_to_strategy(table, encoding))
        }
    }
}
