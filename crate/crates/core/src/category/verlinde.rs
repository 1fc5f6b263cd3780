use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::cyclotomic::{CycloMatrix, Cyclotomic};
use crate::error::{Error, Result};

/// Fusion coefficients from an unnormalized S-matrix:
/// `N_ij^k = (1/dim C) Σ_r s_ir s_jr s_{k*r} / s_0r`.
///
/// The symmetric sums `T_ijk = (1/dim C) Σ_r s_ir s_jr s_kr / s_0r = N_ij^{k*}`
/// are computed first; the duality is read from `T_ij0 = δ_{j,i*}` and then
/// used to relabel the last index. `dim C` is taken as `T`'s own
/// normalization `Σ_r s_0r²`, which is the global dimension for spherical data.
pub fn verlinde_fusion(s: &CycloMatrix) -> Result<Vec<Vec<Vec<u32>>>> {
    if !s.is_square() {
        return Err(Error::NotModular("S-matrix is not square".into()));
    }
    let r = s.rows();
    let inv_d: Vec<Cyclotomic> = (0..r)
        .map(|c| {
            s.get(0, c)
                .inv()
                .map_err(|_| Error::NotModular(format!("s_0{c} is zero")))
        })
        .collect::<Result<_>>()?;
    let dim: Cyclotomic = (0..r).map(|c| s.get(0, c) * s.get(0, c)).sum();
    let inv_dim = dim
        .inv()
        .map_err(|_| Error::Degenerate("global dimension is zero".into()))?;

    // w[i][j][col] = s_i,col s_j,col / (s_0,col dim C)
    let mut t = vec![vec![vec![0u32; r]; r]; r];
    for i in 0..r {
        for j in i..r {
            let w: Vec<Cyclotomic> = (0..r)
                .map(|c| &(&(s.get(i, c) * s.get(j, c)) * &inv_d[c]) * &inv_dim)
                .collect();
            for k in j..r {
                let value: Cyclotomic = (0..r).map(|c| &w[c] * s.get(k, c)).sum();
                let n = to_count(&value).ok_or_else(|| {
                    Error::NotModular(format!(
                        "Verlinde coefficient for ({i},{j},{k}) is {value}, not a nonnegative integer"
                    ))
                })?;
                for (a, b, c) in [(i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)] {
                    t[a][b][c] = n;
                }
            }
        }
    }

    let mut dual = vec![0usize; r];
    for i in 0..r {
        let hits: Vec<usize> = (0..r).filter(|&j| t[i][j][0] != 0).collect();
        match hits.as_slice() {
            [j] if t[i][*j][0] == 1 => dual[i] = *j,
            _ => {
                return Err(Error::NotModular(format!(
                    "Verlinde coefficients give no unique dual for index {i}"
                )))
            }
        }
    }
    if dual[0] != 0 || (0..r).any(|i| dual[dual[i]] != i) {
        return Err(Error::NotModular("derived duality is not an involution fixing 0".into()));
    }

    let n: Vec<Vec<Vec<u32>>> = (0..r)
        .map(|i| (0..r).map(|j| (0..r).map(|k| t[i][j][dual[k]]).collect()).collect())
        .collect();
    // Second pass: the relabelled tensor must reproduce the same duality.
    for i in 0..r {
        for j in 0..r {
            if n[i][j][0] != u32::from(j == dual[i]) {
                return Err(Error::NotModular(format!(
                    "duality axiom fails at ({i},{j}) after Verlinde relabelling"
                )));
            }
        }
    }
    Ok(n)
}

fn to_count(value: &Cyclotomic) -> Option<u32> {
    let k: BigInt = value.to_integer()?;
    if k < BigInt::zero() {
        return None;
    }
    k.to_u32()
}
