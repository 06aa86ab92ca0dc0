//! 2x2 matrices over [`FieldCtx`], their linear and projective orders, and
//! brute-force spectra of `GL(2,q)`, `SL(2,q)`, `PGL(2,q)` and `L_2(q)`.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::field::{Elem, FieldCtx};
use crate::error::{Error, Result};
use crate::numtheory::factor_u64;
use crate::spectra::Spectrum;

/// Largest `q` for which [`omega_bruteforce`] enumerates the whole group.
pub const ENUMERATION_CAP: u64 = 32;
/// Largest subgroup [`subgroup_closure`] will build.
pub const CLOSURE_CAP: usize = 100_000;

/// Row-major `[[a, b], [c, d]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Mat2 {
    pub a: Elem,
    pub b: Elem,
    pub c: Elem,
    pub d: Elem,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 { a: 1, b: 0, c: 0, d: 1 };

    pub fn new(a: Elem, b: Elem, c: Elem, d: Elem) -> Mat2 {
        Mat2 { a, b, c, d }
    }

    pub fn diag(x: Elem, y: Elem) -> Mat2 {
        Mat2::new(x, 0, 0, y)
    }

    pub fn is_scalar(&self) -> bool {
        self.b == 0 && self.c == 0 && self.a == self.d
    }
}

/// Whether products are taken in `GL(2,q)` or modulo scalars.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Linear,
    Projective,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MatrixFamily {
    GL2,
    SL2,
    PGL2,
    PSL2,
}

impl MatrixFamily {
    pub fn mode(self) -> Mode {
        match self {
            MatrixFamily::GL2 | MatrixFamily::SL2 => Mode::Linear,
            MatrixFamily::PGL2 | MatrixFamily::PSL2 => Mode::Projective,
        }
    }

    fn name(self) -> &'static str {
        match self {
            MatrixFamily::GL2 => "GL",
            MatrixFamily::SL2 => "SL",
            MatrixFamily::PGL2 => "PGL",
            MatrixFamily::PSL2 => "PSL",
        }
    }
}

impl FieldCtx {
    pub fn mat_mul(&self, x: &Mat2, y: &Mat2) -> Mat2 {
        let dot = |p: Elem, q: Elem, r: Elem, s: Elem| self.add(self.mul(p, q), self.mul(r, s));
        Mat2 {
            a: dot(x.a, y.a, x.b, y.c),
            b: dot(x.a, y.b, x.b, y.d),
            c: dot(x.c, y.a, x.d, y.c),
            d: dot(x.c, y.b, x.d, y.d),
        }
    }

    pub fn det(&self, m: &Mat2) -> Elem {
        self.sub(self.mul(m.a, m.d), self.mul(m.b, m.c))
    }

    pub fn mat_pow(&self, m: &Mat2, mut k: u64) -> Mat2 {
        let mut acc = Mat2::IDENTITY;
        let mut base = *m;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mat_mul(&acc, &base);
            }
            base = self.mat_mul(&base, &base);
            k >>= 1;
        }
        acc
    }

    /// Canonical representative of the scalar class of `m`: scaled so the
    /// first nonzero entry is 1.
    pub fn normalize(&self, m: &Mat2) -> Mat2 {
        let lead = [m.a, m.b, m.c, m.d].into_iter().find(|&x| x != 0).unwrap_or(1);
        let s = self.inv(lead).unwrap();
        Mat2::new(self.mul(s, m.a), self.mul(s, m.b), self.mul(s, m.c), self.mul(s, m.d))
    }

    /// `lcm(q^2 - 1, p(q - 1))`, the exponent of `GL(2,q)`.
    fn gl2_exponent(&self) -> u64 {
        let q = self.order();
        (q * q - 1).lcm(&(self.p() * (q - 1)))
    }

    fn reduce_order(&self, m: &Mat2, is_one: impl Fn(&Mat2) -> bool) -> u64 {
        let mut e = self.gl2_exponent();
        for (r, _) in factor_u64(e) {
            while e.is_multiple_of(r) && is_one(&self.mat_pow(m, e / r)) {
                e /= r;
            }
        }
        e
    }

    /// Least `k >= 1` with `m^k = I`. `m` must be invertible.
    pub fn linear_order(&self, m: &Mat2) -> u64 {
        self.reduce_order(m, |x| *x == Mat2::IDENTITY)
    }

    /// Least `k >= 1` with `m^k` scalar. `m` must be invertible.
    pub fn projective_order(&self, m: &Mat2) -> u64 {
        self.reduce_order(m, Mat2::is_scalar)
    }

    pub fn order_in(&self, m: &Mat2, mode: Mode) -> u64 {
        match mode {
            Mode::Linear => self.linear_order(m),
            Mode::Projective => self.projective_order(m),
        }
    }

    fn canon(&self, m: &Mat2, mode: Mode) -> Mat2 {
        match mode {
            Mode::Linear => *m,
            Mode::Projective => self.normalize(m),
        }
    }

    fn all_matrices(&self) -> impl Iterator<Item = Mat2> + '_ {
        let q = self.order() as Elem;
        (0..q).flat_map(move |a| {
            (0..q).flat_map(move |b| (0..q).flat_map(move |c| (0..q).map(move |d| Mat2::new(a, b, c, d))))
        })
    }
}

/// A projective matrix: a normalized representative, so `==` is equality
/// modulo scalars.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjMatrix(Mat2);

impl ProjMatrix {
    pub fn new(ctx: &FieldCtx, m: Mat2) -> Result<ProjMatrix> {
        if ctx.det(&m) == 0 {
            return Err(Error::invalid("singular matrix"));
        }
        Ok(ProjMatrix(ctx.normalize(&m)))
    }

    pub fn matrix(&self) -> Mat2 {
        self.0
    }

    pub fn mul(&self, ctx: &FieldCtx, other: &ProjMatrix) -> ProjMatrix {
        ProjMatrix(ctx.normalize(&ctx.mat_mul(&self.0, &other.0)))
    }

    pub fn order(&self, ctx: &FieldCtx) -> u64 {
        ctx.projective_order(&self.0)
    }
}

pub fn projective_order(ctx: &FieldCtx, m: &ProjMatrix) -> u64 {
    m.order(ctx)
}

fn check_enumeration_cap(ctx: &FieldCtx, cap: u64) -> Result<()> {
    if ctx.order() > cap {
        return Err(Error::CapExceeded {
            what: "brute-force field size",
            requested: ctx.order(),
            cap,
        });
    }
    Ok(())
}

/// Every element of the family over `ctx`, ascending; projective families
/// are listed by normalized representative.
pub fn enumerate_group(ctx: &FieldCtx, family: MatrixFamily, cap: u64) -> Result<Vec<Mat2>> {
    check_enumeration_cap(ctx, cap)?;
    let det_ok = |m: &Mat2| match family {
        MatrixFamily::GL2 | MatrixFamily::PGL2 => ctx.det(m) != 0,
        MatrixFamily::SL2 | MatrixFamily::PSL2 => ctx.det(m) == 1,
    };
    let elems: BTreeSet<Mat2> = ctx
        .all_matrices()
        .filter(det_ok)
        .map(|m| ctx.canon(&m, family.mode()))
        .collect();
    Ok(elems.into_iter().collect())
}

/// Element orders of a list of matrices, with multiplicities.
pub fn order_statistics(ctx: &FieldCtx, elems: &[Mat2], mode: Mode) -> BTreeMap<u64, usize> {
    let mut stats = BTreeMap::new();
    for m in elems {
        *stats.entry(ctx.order_in(m, mode)).or_insert(0) += 1;
    }
    stats
}

/// The spectrum of the family, found by enumerating the whole group. `PSL2`
/// is realised as determinant-1 matrices modulo `±I`.
pub fn omega_bruteforce(ctx: &FieldCtx, family: MatrixFamily, cap: u64) -> Result<Spectrum> {
    let elems = enumerate_group(ctx, family, cap)?;
    let stats = order_statistics(ctx, &elems, family.mode());
    let q = if ctx.n() == 1 {
        ctx.p().to_string()
    } else {
        format!("{}^{}", ctx.p(), ctx.n())
    };
    Spectrum::new(stats.into_keys(), format!("{}(2,{q})", family.name()))
}

/// The subgroup generated by `gens`, in breadth-first order from the
/// identity. Fails once more than `cap` elements have been found.
pub fn subgroup_closure(ctx: &FieldCtx, gens: &[Mat2], mode: Mode, cap: usize) -> Result<Vec<Mat2>> {
    let gens: Vec<Mat2> = gens.iter().map(|g| ctx.canon(g, mode)).collect();
    if gens.iter().any(|g| ctx.det(g) == 0) {
        return Err(Error::invalid("generators must be invertible"));
    }
    let start = Mat2::IDENTITY;
    let mut seen: HashSet<Mat2> = HashSet::from([start]);
    let mut order = vec![start];
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = ctx.canon(&ctx.mat_mul(&x, g), mode);
            if seen.insert(y) {
                if seen.len() > cap {
                    return Err(Error::CapExceeded {
                        what: "subgroup closure size",
                        requested: seen.len() as u64,
                        cap: cap as u64,
                    });
                }
                order.push(y);
                queue.push_back(y);
            }
        }
    }
    Ok(order)
}

/// A subgroup found by [`search_sl2_subgroup`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FoundSubgroup {
    pub generators: [Mat2; 2],
    pub elements: Vec<Mat2>,
    /// Element order to number of elements of that order.
    pub orders: BTreeMap<u64, usize>,
    pub attempts: u64,
}

impl FoundSubgroup {
    pub fn spectrum(&self, label: &str) -> Result<Spectrum> {
        Spectrum::new(self.orders.keys().copied(), label)
    }
}

fn random_sl2(ctx: &FieldCtx, rng: &mut ChaCha8Rng) -> Mat2 {
    let q = ctx.order() as Elem;
    loop {
        let m = Mat2::new(rng.gen_range(0..q), rng.gen_range(0..q), rng.gen_range(0..q), rng.gen_range(0..q));
        if ctx.det(&m) == 1 {
            return m;
        }
    }
}

/// Draws seeded random pairs from `SL(2,q)` until their closure has exactly
/// `size` elements and its order statistics pass `accept`.
pub fn search_sl2_subgroup(
    ctx: &FieldCtx,
    size: usize,
    accept: impl Fn(&BTreeMap<u64, usize>) -> bool,
    seed: u64,
    max_attempts: u64,
) -> Result<Option<FoundSubgroup>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=max_attempts {
        let gens = [random_sl2(ctx, &mut rng), random_sl2(ctx, &mut rng)];
        let elements = match subgroup_closure(ctx, &gens, Mode::Linear, size) {
            Ok(e) => e,
            Err(Error::CapExceeded { .. }) => continue,
            Err(e) => return Err(e),
        };
        if elements.len() != size {
            continue;
        }
        let orders = order_statistics(ctx, &elements, Mode::Linear);
        if accept(&orders) {
            return Ok(Some(FoundSubgroup {
                generators: gens,
                elements,
                orders,
                attempts: attempt,
            }));
        }
    }
    Ok(None)
}

/// Default number of generator pairs tried by the subgroup searches.
pub const SEARCH_ATTEMPTS: u64 = 100_000;

/// A 48-element subgroup of `SL(2,7)` with element orders
/// `{1,2,3,4,6,8}` and a single involution: the binary octahedral group
/// `2.S_4`, whose Sylow 2-subgroup is generalized quaternion.
pub fn find_binary_octahedral(seed: u64) -> Result<Option<FoundSubgroup>> {
    let ctx = FieldCtx::new(7, 1)?;
    search_sl2_subgroup(
        &ctx,
        48,
        |o| o.keys().copied().eq([1, 2, 3, 4, 6, 8]) && o[&2] == 1,
        seed,
        SEARCH_ATTEMPTS,
    )
}

/// A 24-element subgroup of `SL(2,7)` with element orders `{1,2,3,4,6}`:
/// the binary tetrahedral group `SL(2,3)`.
pub fn find_binary_tetrahedral(seed: u64) -> Result<Option<FoundSubgroup>> {
    let ctx = FieldCtx::new(7, 1)?;
    search_sl2_subgroup(
        &ctx,
        24,
        |o| o.keys().copied().eq([1, 2, 3, 4, 6]),
        seed,
        SEARCH_ATTEMPTS,
    )
}
