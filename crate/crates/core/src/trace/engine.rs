use std::collections::HashMap;
use std::sync::RwLock;

use crate::algebra::IntPoly3;
use crate::words::tilde::{cyclic_reduce, invert_tilde, least_rotation, TildeSym, TildeWord};

/// Computes trace polynomials by the splitting recursion
/// `tr(xy) = tr(x) tr(y) - tr(x^-1 y)`, memoized on least cyclic rotations.
///
/// The memo is shared behind a lock, so one engine can serve parallel callers.
#[derive(Debug)]
pub struct TraceEngine {
    memo: Option<RwLock<HashMap<Vec<TildeSym>, IntPoly3>>>,
}

impl Default for TraceEngine {
    fn default() -> Self {
        Self::new()
    }
}

impl TraceEngine {
    pub fn new() -> Self {
        TraceEngine { memo: Some(RwLock::new(HashMap::new())) }
    }

    /// No memo; every call recomputes from the base cases.
    pub fn uncached() -> Self {
        TraceEngine { memo: None }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.as_ref().map_or(0, |m| m.read().expect("memo lock").len())
    }

    pub fn trace(&self, w: &TildeWord) -> IntPoly3 {
        let red = cyclic_reduce(w);
        let t = self.trace_cyclic(&least_rotation(&red.syms));
        if red.z {
            -t
        } else {
            t
        }
    }

    fn trace_cyclic(&self, key: &[TildeSym]) -> IntPoly3 {
        if let Some(t) = base_case(key) {
            return t;
        }
        if let Some(memo) = &self.memo {
            if let Some(t) = memo.read().expect("memo lock").get(key) {
                return t.clone();
            }
        }
        let (x, y) = split(key);
        let x_inv_y = invert_tilde(&x).concat(&y);
        let t = &self.trace(&x) * &self.trace(&y) - self.trace(&x_inv_y);
        if let Some(memo) = &self.memo {
            memo.write().expect("memo lock").entry(key.to_vec()).or_insert_with(|| t.clone());
        }
        t
    }
}

pub fn trace_poly(w: &TildeWord) -> IntPoly3 {
    TraceEngine::new().trace(w)
}

/// Splits a cyclically reduced word of length >= 4 as `x y` after rotation,
/// where the first symbol of the rotation and the first symbol of `y` share a
/// class. Among all choices, the most balanced split wins; ties go to the
/// smaller rotation, then the smaller split point.
fn split(syms: &[TildeSym]) -> (TildeWord, TildeWord) {
    let l = syms.len();
    let mut best: Option<(usize, usize, usize)> = None;
    for rot in 0..l {
        let first = syms[rot];
        // y starts at the k-th symbol (1-based), k in [2, l-1]
        for k in 2..l {
            if syms[(rot + k - 1) % l].class() != first.class() {
                continue;
            }
            let cost = (k - 1).max(l - k + 1);
            if best.map_or(true, |(c, _, _)| cost < c) {
                best = Some((cost, rot, k));
            }
        }
    }
    let (_, rot, k) = best.expect("a word of length >= 4 over three classes repeats a class non-adjacently");
    let mut r = syms.to_vec();
    r.rotate_left(rot);
    let y = r.split_off(k - 1);
    (TildeWord::from_syms(&r), TildeWord::from_syms(&y))
}

/// Traces of cyclically reduced words of length <= 3, keyed by their least
/// rotation.
fn base_case(syms: &[TildeSym]) -> Option<IntPoly3> {
    use TildeSym::*;
    let (u, v, w) = (IntPoly3::u(), IntPoly3::v(), IntPoly3::w());
    let one = IntPoly3::constant(1);
    let t = match syms {
        [] => IntPoly3::constant(2),
        [A] | [Ainv] => one,
        [B] | [C] => IntPoly3::zero(),
        [B, C] | [C, B] => u,
        [A, C] | [C, A] => v,
        [A, B] | [B, A] => w,
        [Ainv, B] | [B, Ainv] => -w,
        [Ainv, C] | [C, Ainv] => -v,
        [_, _, _] => {
            let has_a = syms.contains(&A);
            let order_abc = is_rotation_of(syms, &[A, B, C]) || is_rotation_of(syms, &[Ainv, B, C]);
            match (has_a, order_abc) {
                (true, true) => one,
                (true, false) => u - one,
                (false, true) => u - one,
                (false, false) => one,
            }
        }
        _ => return None,
    };
    Some(t)
}

fn is_rotation_of(a: &[TildeSym], b: &[TildeSym]) -> bool {
    a.len() == b.len() && (0..b.len()).any(|k| a.iter().zip(b.iter().cycle().skip(k)).all(|(x, y)| x == y))
}
