//! Closed-form upper bounds on the burning number, evaluated exactly.
//!
//! Every ceiling or floor of a square-root expression is rewritten as an
//! integer threshold test, so no floating point is involved anywhere. For
//! example `ceil(sqrt(N + 1/4) - 3/2)` is the least `k >= 0` with
//! `(2k + 3)^2 >= 4N + 1`.

use serde::{Deserialize, Serialize};

/// `ceil(sqrt(x))`.
pub fn ceil_sqrt(x: u64) -> u64 {
    let s = x.isqrt();
    if s * s == x {
        s
    } else {
        s + 1
    }
}

/// `floor(sqrt(x))`.
pub fn floor_sqrt(x: u64) -> u64 {
    x.isqrt()
}

/// `ceil(sqrt(N + 1/4) - 3/2)` for `N >= 1`; always `N >= m(m+1) + 1`.
pub fn m_of(total: u64) -> u64 {
    let s = ceil_sqrt(4 * total + 1);
    // least k >= 0 with 2k + 3 >= s
    s.saturating_sub(3).div_ceil(2)
}

/// `ceil(sqrt(n + n2 - m))` with `m = m_of(n + n2)`.
pub fn bound_main1(n: u64, n2: u64) -> u64 {
    let total = n + n2;
    ceil_sqrt(total - m_of(total))
}

/// `ceil(sqrt(n + n2))`.
pub fn bound_murakami(n: u64, n2: u64) -> u64 {
    ceil_sqrt(n + n2)
}

/// `ceil(sqrt(n + n2 + 1/4) + 1/2)`: least `k` with `(2k - 1)^2 >= 4(n + n2) + 1`.
pub fn bound_bessy(n: u64, n2: u64) -> u64 {
    (ceil_sqrt(4 * (n + n2) + 1) + 1).div_ceil(2)
}

/// `ceil((sqrt(24n + 33) - 3) / 4)`: least `k` with `4k + 3 >= sqrt(24n + 33)`.
pub fn bound_land_lu(n: u64) -> u64 {
    ceil_sqrt(24 * n + 33).saturating_sub(3).div_ceil(4)
}

/// `floor(sqrt(4n/3) + 1)`: one more than the largest `k` with `3k^2 <= 4n`.
pub fn bound_bastide_floor(n: u64) -> u64 {
    (4 * n / 3).isqrt() + 1
}

/// `sqrt(4n/3) + 1` truncated to six decimals.
pub fn bound_bastide_decimal(n: u64) -> String {
    let scaled = (4 * n as u128 * 1_000_000_000_000 / 3).isqrt() + 1_000_000;
    format!("{}.{:06}", scaled / 1_000_000, scaled % 1_000_000)
}

/// `2 ceil(sqrt(n)) - 1`.
pub fn bound_bonato_2016(n: u64) -> u64 {
    2 * ceil_sqrt(n) - 1
}

/// True iff `n2 <= floor(sqrt(n - 1))`, the degree-2 budget under which the
/// tree bound never exceeds `ceil(sqrt(n))`.
pub fn corollary_main_applies(n: u64, n2: u64) -> bool {
    n2 <= floor_sqrt(n.saturating_sub(1))
}

/// Every tabulated bound for a tree of order `n` with `n2` degree-2 vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundTable {
    pub n: u64,
    pub n2: u64,
    pub m: u64,
    pub conjecture: u64,
    pub main1: u64,
    pub murakami: u64,
    pub bessy: u64,
    pub land_lu: u64,
    pub bastide_floor: u64,
    pub bastide: String,
    pub bonato_2016: u64,
    pub corollary_main_applies: bool,
}

/// Requires `n >= 1` and `n2 <= n`.
pub fn prior_bounds(n: u64, n2: u64) -> BoundTable {
    assert!(n >= 1 && n2 <= n, "bounds need n >= 1 and n2 <= n");
    BoundTable {
        n,
        n2,
        m: m_of(n + n2),
        conjecture: ceil_sqrt(n),
        main1: bound_main1(n, n2),
        murakami: bound_murakami(n, n2),
        bessy: bound_bessy(n, n2),
        land_lu: bound_land_lu(n),
        bastide_floor: bound_bastide_floor(n),
        bastide: bound_bastide_decimal(n),
        bonato_2016: bound_bonato_2016(n),
        corollary_main_applies: corollary_main_applies(n, n2),
    }
}
