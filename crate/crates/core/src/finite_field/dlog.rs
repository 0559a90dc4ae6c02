use super::{FieldElement, FieldSpec};
use crate::{Error, Result};

/// Default bound on `q` for a full discrete-log table.
pub const DEFAULT_MEMORY_CAP: u64 = 1 << 24;

const UNSET: u32 = u32::MAX;

/// Full discrete-log table of `F_q^*` with respect to a primitive element,
/// built in one multiplicative sweep. Elements are addressed by their
/// base-`p` encoding ([`FieldSpec::encode`]).
#[derive(Debug, Clone)]
pub struct DlogTable {
    p: u64,
    q: u64,
    /// `powers[i]` is the code of `g^i`, `0 <= i < q - 1`.
    powers: Vec<u32>,
    /// `logs[code]` is `i` with `g^i = code`; `logs[0]` is unset.
    logs: Vec<u32>,
}

impl DlogTable {
    /// Fails with a resource-limit error if `q > memory_cap`, and with an
    /// invalid-argument error if `g` is not primitive.
    pub fn build(spec: &FieldSpec, g: &FieldElement, memory_cap: u64) -> Result<Self> {
        let q = spec.q();
        if q > memory_cap {
            return Err(Error::limit(
                format!("discrete-log table for q = {q}"),
                memory_cap,
            ));
        }
        if q > u32::MAX as u64 {
            return Err(Error::limit(format!("discrete-log table for q = {q}"), u32::MAX as u64));
        }
        let order = (q - 1) as usize;
        let mut powers = Vec::with_capacity(order);
        let mut logs = vec![UNSET; q as usize];
        let mut x = spec.one();
        for i in 0..order {
            let code = spec.encode(&x);
            if logs[code as usize] != UNSET {
                return Err(Error::invalid(format!("{g} is not a primitive element")));
            }
            logs[code as usize] = i as u32;
            powers.push(code as u32);
            x = spec.mul(&x, g);
        }
        Ok(DlogTable {
            p: spec.p(),
            q,
            powers,
            logs,
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Discrete log of the element with the given code; `None` for zero.
    pub fn log_code(&self, code: u64) -> Option<u64> {
        match self.logs.get(code as usize) {
            Some(&l) if l != UNSET => Some(l as u64),
            _ => None,
        }
    }

    pub fn log(&self, spec: &FieldSpec, x: &FieldElement) -> Option<u64> {
        self.log_code(spec.encode(x))
    }

    /// Codes of `g^0, g^1, ..., g^{q-2}`.
    pub fn powers(&self) -> &[u32] {
        &self.powers
    }

    /// Code of `x + 1` given the code of `x`; only the constant digit moves.
    #[inline]
    pub fn succ_code(&self, code: u32) -> u32 {
        let p = self.p as u32;
        if code % p == p - 1 {
            code - (p - 1)
        } else {
            code + 1
        }
    }
}
