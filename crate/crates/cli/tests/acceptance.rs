//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.
//!
//! Reference values come from the oracles below, which work on raw bitmasks
//! taken from the JSON form of each space and share no code with the
//! library's region, quality, Möbius or inflection routines.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::Instant;

use sapprox::bridges::{belief_from_space, induce_belief, space_from_belief, Mode};
use sapprox::format::{DeciderSpec, SpaceDoc};
use sapprox::monotone::{check_partial_monotone, inflection_points, is_irreducible, MonotoneScope};
use sapprox::regions::{decompose, lower_approx, quality, upper_approx};
use sapprox::verify::{
    exit_code, random_belief, random_belief_over, random_space, replay, verify_claims, ClaimId,
    ClaimStatus, Detail, VerifySource,
};
use sapprox::{
    build_belief_structure, build_space, mobius, zeta, BeliefStructure, DeciderKind, ElementSet,
    Rational, SApproxSpace, SetFunction, Universe,
};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn r(n: i128, d: i128) -> Rational {
    Rational::new(n, d).unwrap()
}

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

/// A space as plain masks: `images[x]` over `W`, and the decider as a
/// closure on `(A, X)` masks.
struct MaskSpace {
    n_u: usize,
    n_w: usize,
    images: Vec<u64>,
    decide: Box<dyn Fn(u64, u64) -> bool>,
}

impl MaskSpace {
    fn of(g: &SApproxSpace) -> MaskSpace {
        let doc: SpaceDoc = g.to_doc();
        let index: BTreeMap<&str, usize> = doc.w.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let mask = |labels: &[String]| labels.iter().fold(0u64, |m, l| m | 1 << index[l.as_str()]);
        let t: BTreeMap<&str, u64> = doc.t.iter().map(|(k, v)| (k.as_str(), mask(v))).collect();
        let images = doc.u.iter().map(|x| t[x.as_str()]).collect();
        let decide: Box<dyn Fn(u64, u64) -> bool> = match &doc.s {
            DeciderSpec::Inclusion => Box::new(|a, x| a & !x == 0),
            DeciderSpec::Intersects => Box::new(|a, x| a & x != 0),
            DeciderSpec::CardThreshold { k } => {
                let k = *k as u32;
                Box::new(move |_, x| x.count_ones() >= k)
            }
            DeciderSpec::Table { entries } => {
                let table: BTreeMap<u64, Vec<u64>> = entries
                    .iter()
                    .map(|e| (mask(&e.a), e.minimal.iter().map(|m| mask(m)).collect()))
                    .collect();
                Box::new(move |a, x| table.get(&a).is_some_and(|ms| ms.iter().any(|m| m & !x == 0)))
            }
        };
        MaskSpace {
            n_u: doc.u.len(),
            n_w: doc.w.len(),
            images,
            decide,
        }
    }

    fn full_w(&self) -> u64 {
        (1 << self.n_w) - 1
    }

    fn full_u(&self) -> u64 {
        (1 << self.n_u) - 1
    }

    fn collect(&self, keep: impl Fn(u64) -> bool) -> u64 {
        self.images
            .iter()
            .enumerate()
            .filter(|(_, &a)| keep(a))
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    fn lower(&self, x: u64) -> u64 {
        self.collect(|a| (self.decide)(a, x))
    }

    fn upper(&self, x: u64) -> u64 {
        let xc = self.full_w() ^ x;
        self.collect(|a| !(self.decide)(a, xc))
    }

    fn pos(&self, x: u64) -> u64 {
        self.lower(x) & self.upper(x)
    }

    fn neg(&self, x: u64) -> u64 {
        self.full_u() & !(self.lower(x) | self.upper(x))
    }

    fn br(&self, x: u64) -> u64 {
        self.lower(x) ^ self.upper(x)
    }

    fn q_lower(&self, x: u64) -> Rational {
        r(self.pos(x).count_ones().into(), self.n_u as i128)
    }

    fn q_upper(&self, x: u64) -> Rational {
        r((self.pos(x) | self.br(x)).count_ones().into(), self.n_u as i128)
    }

    fn monotone(&self) -> bool {
        let n = self.full_w() + 1;
        self.images.iter().all(|&a| {
            (0..n).all(|x| (0..n).filter(|y| x & !y == 0).all(|y| !(self.decide)(a, x) || (self.decide)(a, y)))
        })
    }

    /// Minimal accepted sets of `S(T(x), ·)`, ascending.
    fn inflection(&self, x: usize) -> Vec<u64> {
        let a = self.images[x];
        let n = self.full_w() + 1;
        (0..n)
            .filter(|&m| (self.decide)(a, m))
            .filter(|&m| (0..n).all(|y| y == m || y & !m != 0 || !(self.decide)(a, y)))
            .collect()
    }

    fn irreducible(&self) -> bool {
        (0..self.n_u).all(|x| {
            let ip = self.inflection(x);
            !(ip.is_empty() || ip == [0])
        })
    }
}

fn mask_of(set: &ElementSet) -> u64 {
    set.mask().expect("small universe")
}

/// `Σ_{B ⊆ A} (−1)^{|A∖B|} f(B)`.
fn naive_mobius(f: &[Rational]) -> Vec<Rational> {
    (0..f.len())
        .map(|a| {
            (0..f.len())
                .filter(|b| b & !a == 0)
                .map(|b| if (a & !b).count_ones() % 2 == 0 { f[b] } else { -f[b] })
                .sum()
        })
        .collect()
}

/// `Bel(X) = Σ_{Y ⊆ X} m(Y)` and `Pl(X) = Σ_{Y ∩ X ≠ ∅} m(Y)` from the
/// focal list.
fn bel_pl(bs: &BeliefStructure, x: u64) -> (Rational, Rational) {
    let mut bel = Rational::ZERO;
    let mut pl = Rational::ZERO;
    for (set, m) in bs.focal_elements() {
        let y = mask_of(set);
        if y & !x == 0 {
            bel = bel + *m;
        }
        if y & x != 0 {
            pl = pl + *m;
        }
    }
    (bel, pl)
}

/// Sizes for the `i`-th random instance: `|U|` in 1..=8, `|W|` in 1..=5,
/// drawn independently of the decider kind `i mod 4`.
fn sizes(i: u64) -> (usize, usize) {
    let z = Mix(i).next();
    (1 + (z % 8) as usize, 1 + ((z >> 8) % 5) as usize)
}

/// SplitMix64, for test-side random numbers.
struct Mix(u64);

impl Mix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

/// Random spaces of every kind meeting `keep`, until `count` are found.
fn spaces_where(
    count: usize,
    kinds: &[DeciderKind],
    mut keep: impl FnMut(&SApproxSpace, &MaskSpace) -> bool,
) -> Result<Vec<SApproxSpace>, String> {
    let mut found = Vec::with_capacity(count);
    let mut seed = 0u64;
    while found.len() < count {
        ensure!(seed < 100 * count as u64 + 1000, "only {} of {count} qualifying spaces", found.len());
        let kind = kinds[seed as usize % kinds.len()];
        let (u, w) = sizes(seed);
        let g = random_space(seed, u, w, kind).map_err(|e| e.to_string())?;
        let o = MaskSpace::of(&g);
        if keep(&g, &o) {
            found.push(g);
        }
        seed += 1;
    }
    Ok(found)
}

fn lib<T>(v: sapprox::Result<T>) -> Result<T, String> {
    v.map_err(|e| e.to_string())
}

// ---------------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------------

fn ex1() -> SApproxSpace {
    build_space(
        ["u1", "u2"],
        ["a", "b"],
        &[("u1", vec!["a"]), ("u2", vec!["a", "b"])],
        &DeciderSpec::Inclusion,
    )
    .unwrap()
}

fn ex2() -> SApproxSpace {
    build_space(["v"], ["a", "b", "c"], &[("v", vec!["a"])], &DeciderSpec::CardThreshold { k: 2 }).unwrap()
}

fn criterion_1() -> Check {
    let g = ex1();
    let w = g.w();
    let show = |s: ElementSet| s.to_string();
    // X, lower, upper, pos, neg, br, q_lower, q_upper
    let table = [
        (&[][..], "{}", "{}", "{}", "{u1,u2}", "{}", r(0, 1), r(0, 1)),
        (&["a"][..], "{u1}", "{u1,u2}", "{u1}", "{}", "{u2}", r(1, 2), r(1, 1)),
        (&["b"][..], "{}", "{u2}", "{}", "{u1}", "{u2}", r(0, 1), r(1, 2)),
        (&["a", "b"][..], "{u1,u2}", "{u1,u2}", "{u1,u2}", "{}", "{}", r(1, 1), r(1, 1)),
    ];
    let o = MaskSpace::of(&g);
    for (labels, lower, upper, pos, neg, br, ql, qu) in table {
        let x = lib(w.set(labels.iter().copied()))?;
        let d = lib(decompose(&g, &x))?;
        let got = (
            show(lib(lower_approx(&g, &x))?),
            show(lib(upper_approx(&g, &x))?),
            show(d.pos),
            show(d.neg),
            show(d.br),
        );
        ensure!(
            got == (lower.into(), upper.into(), pos.into(), neg.into(), br.into()),
            "regions of {x}: {got:?}"
        );
        let q = lib(quality(&g, &x))?;
        ensure!(q.q_lower == ql && q.q_upper == qu, "quality of {x}: {q:?}");
        let m = mask_of(&x);
        ensure!(o.q_lower(m) == ql && o.q_upper(m) == qu, "oracle quality of {x}");
    }
    let f = lib(SetFunction::from_fn(w.clone(), |x| Ok(quality(&g, x)?.q_lower)))?;
    let masses = lib(mobius(&f))?;
    ensure!(masses.values() == [r(0, 1), r(1, 2), r(0, 1), r(1, 2)], "masses {:?}", masses.values());
    ensure!(naive_mobius(f.values()) == masses.values(), "fast and naive masses differ");
    let ips: Vec<Vec<String>> = (0..2)
        .map(|x| inflection_points(&g, x).map(|ps| ps.into_iter().map(show).collect()))
        .collect::<sapprox::Result<_>>()
        .map_err(|e| e.to_string())?;
    ensure!(ips == [vec!["{a}".to_string()], vec!["{a,b}".to_string()]], "inflection {ips:?}");
    ensure!(o.inflection(0) == [0b01] && o.inflection(1) == [0b11], "oracle inflection");
    let induced = lib(belief_from_space(&g, Mode::Strict))?;
    ensure!(induced.valid(), "EX1 masses invalid");
    Ok(())
}

fn criterion_2() -> Check {
    let mut checked = 0;
    for seed in 0..200u64 {
        let kind = DeciderKind::ALL[seed as usize % 4];
        let (u, w) = sizes(seed);
        let g = lib(random_space(seed, u, w, kind))?;
        let o = MaskSpace::of(&g);
        let full = o.full_w();
        for x in 0..=full {
            let set = g.w().set_from_mask(x);
            let lower = mask_of(&lib(lower_approx(&g, &set))?);
            let upper = mask_of(&lib(upper_approx(&g, &set))?);
            let d = lib(decompose(&g, &set))?;
            let (pos, neg, br) = (mask_of(&d.pos), mask_of(&d.neg), mask_of(&d.br));
            let q = lib(quality(&g, &set))?;
            // oracle agreement
            ensure!(
                (lower, upper, pos, neg, br) == (o.lower(x), o.upper(x), o.pos(x), o.neg(x), o.br(x)),
                "seed {seed} X={set}: library regions differ from oracle"
            );
            ensure!(q.q_lower == o.q_lower(x) && q.q_upper == o.q_upper(x), "seed {seed} X={set}: qualities");
            // identities
            let xc = full ^ x;
            let setc = g.w().set_from_mask(xc);
            let lower_c = mask_of(&lib(lower_approx(&g, &setc))?);
            let upper_c = mask_of(&lib(upper_approx(&g, &setc))?);
            let dc = lib(decompose(&g, &setc))?;
            let qc = lib(quality(&g, &setc))?;
            ensure!(upper == o.full_u() & !lower_c, "seed {seed} X={set}: upper = (lower of complement)ᶜ");
            ensure!(lower == o.full_u() & !upper_c, "seed {seed} X={set}: lower = (upper of complement)ᶜ");
            ensure!(pos == mask_of(&dc.neg), "seed {seed} X={set}: pos(X) = neg(Xᶜ)");
            ensure!(br == mask_of(&dc.br), "seed {seed} X={set}: br(X) = br(Xᶜ)");
            ensure!(q.q_lower == Rational::ONE - qc.q_upper, "seed {seed} X={set}: quality duality");
            checked += 1;
        }
    }
    ensure!(checked > 200, "too few sets checked");
    Ok(())
}

fn prop21_holds(item: u8, l: &[u64], h: &[u64], p: &[u64], n: &[u64], x: usize, y: usize) -> bool {
    let sub = |a: u64, b: u64| a & !b == 0;
    let inc = x & !y == 0;
    match item {
        1 => !inc || sub(h[x], h[y]),
        2 => !inc || sub(l[x], l[y]),
        3 => sub(h[x] | h[y], h[x | y]),
        4 => sub(h[x & y], h[x] & h[y]),
        5 => sub(l[x] | l[y], l[x | y]),
        6 => sub(l[x & y], l[x] & l[y]),
        9 => !inc || sub(p[x], p[y]),
        10 => !inc || sub(n[y], n[x]),
        11 => sub(p[x] | p[y], p[x | y]),
        12 => sub(n[x | y], n[x] | n[y]),
        13 => sub(p[x & y], p[x] & p[y]),
        14 => sub(n[x] & n[y], n[x & y]),
        15 => sub(p[x] & n[y], p[x] & n[x & y]),
        _ => true,
    }
}

fn criterion_3() -> Check {
    let spaces = spaces_where(100, &DeciderKind::ALL, |g, o| {
        let lib_says = check_partial_monotone(g, MonotoneScope::Space).unwrap().holds;
        assert_eq!(lib_says, o.monotone(), "monotonicity check disagrees with oracle");
        lib_says
    })?;
    for g in &spaces {
        let o = MaskSpace::of(g);
        let len = (o.full_w() + 1) as usize;
        let (mut l, mut h, mut p, mut n) = (vec![], vec![], vec![], vec![]);
        for x in 0..len as u64 {
            let set = g.w().set_from_mask(x);
            l.push(mask_of(&lib(lower_approx(g, &set))?));
            h.push(mask_of(&lib(upper_approx(g, &set))?));
            let d = lib(decompose(g, &set))?;
            p.push(mask_of(&d.pos));
            n.push(mask_of(&d.neg));
        }
        let full_u = o.full_u();
        for x in 0..len {
            let xc = (o.full_w() as usize) ^ x;
            ensure!(h[x] == full_u & !l[xc], "item 7 fails at {x:#b}");
            ensure!(l[x] == full_u & !h[xc], "item 8 fails at {x:#b}");
            for y in 0..len {
                for item in (1..=15).filter(|i| ![7, 8].contains(i)) {
                    ensure!(
                        prop21_holds(item, &l, &h, &p, &n, x, y),
                        "item {item} fails at X={x:#b} Y={y:#b} on {:?}",
                        g.to_doc()
                    );
                }
            }
        }
    }
    Ok(())
}

fn irreducible_monotone(g: &SApproxSpace, o: &MaskSpace) -> bool {
    let monotone = check_partial_monotone(g, MonotoneScope::Space).unwrap().holds;
    let irreducible = monotone && is_irreducible(g).unwrap();
    assert_eq!(irreducible, o.monotone() && o.irreducible(), "irreducibility disagrees with oracle");
    irreducible
}

fn criterion_4() -> Check {
    let spaces = spaces_where(100, &DeciderKind::ALL, irreducible_monotone)?;
    for g in &spaces {
        let empty = lib(quality(g, &g.w().empty_set()))?;
        let whole = lib(quality(g, &g.w().full_set()))?;
        ensure!(empty.q_lower == Rational::ZERO, "q_lower(∅) = {} on {:?}", empty.q_lower, g.to_doc());
        ensure!(whole.q_lower == Rational::ONE, "q_lower(W) = {} on {:?}", whole.q_lower, g.to_doc());
    }
    Ok(())
}

fn criterion_5() -> Check {
    let spaces = spaces_where(100, &[DeciderKind::Inclusion], irreducible_monotone)?;
    for g in &spaces {
        let o = MaskSpace::of(g);
        let res = lib(belief_from_space(g, Mode::Strict))?;
        ensure!(res.valid(), "invalid masses on {:?}", g.to_doc());
        for y in 0..=o.full_w() {
            let count = o.images.iter().filter(|&&a| a == y).count();
            let expected = r(count as i128, o.n_u as i128);
            let got = res.mass(&g.w().set_from_mask(y));
            ensure!(got == expected, "mass of {y:#b}: {got} != {expected}");
        }
        let bs = lib(res.to_belief_structure())?;
        for x in 0..=o.full_w() {
            let (bel, _) = bel_pl(&bs, x);
            let q = lib(quality(g, &g.w().set_from_mask(x)))?;
            ensure!(bel == q.q_lower && bel == o.q_lower(x), "Bel({x:#b}) = {bel} but q_lower = {}", q.q_lower);
        }
    }
    Ok(())
}

fn criterion_6() -> Check {
    for seed in 0..100u64 {
        let w_size = 1 + (seed % 5) as usize;
        let bs = lib(random_belief(seed, w_size, 36))?;
        ensure!(lib(bs.common_denominator())? <= 36, "denominator cap");
        let h = lib(space_from_belief(&bs))?;
        let o = MaskSpace::of(&h);
        ensure!(o.monotone() && o.irreducible(), "constructed space fails hypotheses");
        for x in 0..=o.full_w() {
            let (bel, pl) = bel_pl(&bs, x);
            let q = lib(quality(&h, &h.w().set_from_mask(x)))?;
            ensure!(q.q_lower == bel, "seed {seed} X={x:#b}: q_lower {} != Bel {bel}", q.q_lower);
            ensure!(q.q_upper == pl, "seed {seed} X={x:#b}: q_upper {} != Pl {pl}", q.q_upper);
            ensure!(o.q_lower(x) == bel && o.q_upper(x) == pl, "seed {seed}: oracle qualities");
        }
        let back = lib(belief_from_space(&h, Mode::Strict))?;
        ensure!(back.valid(), "seed {seed}: round trip invalid");
        ensure!(lib(back.to_belief_structure())? == bs, "seed {seed}: round trip differs");
    }
    Ok(())
}

fn criterion_7() -> Check {
    let spaces = spaces_where(100, &DeciderKind::ALL, irreducible_monotone)?;
    for (i, g) in spaces.iter().enumerate() {
        let o = MaskSpace::of(g);
        let bs = lib(random_belief_over(1000 + i as u64, g.u(), 36))?;
        let res = lib(induce_belief(&bs, g, Mode::Strict))?;
        // direct summation
        let mut reference = vec![Rational::ZERO; (o.full_w() + 1) as usize];
        for (focal, m) in bs.focal_elements() {
            let members: Vec<usize> = (0..o.n_u).filter(|&x| mask_of(focal) >> x & 1 == 1).collect();
            for &x in &members {
                let ip = o.inflection(x);
                for &y in &ip {
                    reference[y as usize] =
                        reference[y as usize] + *m / r(members.len() as i128, 1) / r(ip.len() as i128, 1);
                }
            }
        }
        ensure!(res.mass(&g.w().empty_set()) == Rational::ZERO, "m'(∅) ≠ 0");
        let total: Rational = res.entries().iter().map(|(_, v)| *v).sum();
        ensure!(total == Rational::ONE, "Σ m' = {total}");
        for (y, expected) in reference.iter().enumerate() {
            let got = res.mass(&g.w().set_from_mask(y as u64));
            ensure!(got == *expected, "m'({y:#b}) = {got}, summation gives {expected}");
        }
        ensure!(res.valid(), "induced structure invalid");
    }
    Ok(())
}

fn cli_exit(space_json: &str) -> Result<i32, String> {
    let dir = std::env::temp_dir().join(format!("sapprox-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let path: PathBuf = dir.join("space.json");
    std::fs::write(&path, space_json).map_err(|e| e.to_string())?;
    let out = Command::new(env!("CARGO_BIN_EXE_sapprox"))
        .args(["verify", "--space", path.to_str().unwrap()])
        .output()
        .map_err(|e| e.to_string())?;
    let _ = std::fs::remove_dir_all(&dir);
    out.status.code().ok_or_else(|| "killed by signal".to_string())
}

fn criterion_8() -> Check {
    let all = ClaimId::all();
    let reports = lib(verify_claims(&VerifySource::Space(ex2()), &all))?;
    let find = |id: ClaimId| reports.iter().find(|r| r.claim == id).unwrap();
    let p35 = find(ClaimId::P35);
    ensure!(p35.status == ClaimStatus::Counterexample, "P3.5 on EX2: {:?}", p35.status);
    let witness = p35.witness.as_ref().ok_or("no witness")?;
    let family = match &witness.detail {
        Detail::Family { family, lhs, rhs } => {
            ensure!(*lhs == r(1, 1) && *rhs == r(3, 1), "sides {lhs} and {rhs}");
            family.clone()
        }
        other => return Err(format!("unexpected detail {other:?}")),
    };
    let pairs: Vec<Vec<String>> = [["a", "b"], ["a", "c"], ["b", "c"]]
        .iter()
        .map(|p| p.iter().map(|s| s.to_string()).collect())
        .collect();
    ensure!(family == pairs, "family {family:?}");
    ensure!(lib(replay(ClaimId::P35, witness))?, "witness does not replay");
    // the family inequality recomputed from the oracle's qualities
    let o = MaskSpace::of(&ex2());
    let q = |m: u64| o.q_lower(m);
    let rhs = q(0b011) + q(0b101) + q(0b110) - q(0b001) - q(0b010) - q(0b100) + q(0);
    ensure!(q(0b111) == r(1, 1) && rhs == r(3, 1), "oracle sides");

    let p36 = find(ClaimId::P36);
    let neg = Detail::NegativeMass {
        set: vec!["a".into(), "b".into(), "c".into()],
        value: r(-2, 1),
    };
    ensure!(p36.witness.as_ref().map(|w| &w.detail) == Some(&neg), "P3.6 witness {:?}", p36.witness);
    let f: Vec<Rational> = (0..8).map(q).collect();
    ensure!(naive_mobius(&f)[7] == r(-2, 1), "oracle mass on W");
    for rep in &reports {
        if let Some(w) = &rep.witness {
            ensure!(lib(replay(rep.claim, w))?, "{} witness does not replay", rep.claim);
        }
    }
    ensure!(exit_code(&reports) == 2, "library exit code on EX2");

    let ex1_reports = lib(verify_claims(&VerifySource::Space(ex1()), &all))?;
    for rep in &ex1_reports {
        ensure!(rep.status == ClaimStatus::Holds, "{} on EX1: {:?}", rep.claim, rep.status);
    }
    ensure!(exit_code(&ex1_reports) == 0, "library exit code on EX1");

    let to_text = |g: &SApproxSpace| sapprox::format::to_json(&g.to_doc());
    let code = cli_exit(&to_text(&ex2()))?;
    ensure!(code == 2, "CLI exit code on EX2: {code}");
    let code = cli_exit(&to_text(&ex1()))?;
    ensure!(code == 0, "CLI exit code on EX1: {code}");
    Ok(())
}

fn criterion_9() -> Check {
    let mut rng = Mix(2024);
    for case in 0..50 {
        let n = 1 + case % 5;
        let w = lib(Universe::new((0..n).map(|i| format!("w{i}"))))?;
        let values: Vec<Rational> = (0..1usize << n)
            .map(|_| {
                let num = (rng.next() % 41) as i128 - 20;
                let den = (rng.next() % 12) as i128 + 1;
                r(num, den)
            })
            .collect();
        let f = lib(SetFunction::new(w, values))?;
        let fast = lib(mobius(&f))?;
        ensure!(fast.values() == naive_mobius(f.values()), "case {case}: fast ≠ naive");
        ensure!(lib(zeta(&fast))? == f, "case {case}: zeta ∘ mobius ≠ id");
    }
    // the masses of a structure come back out of its belief function
    let bs = lib(build_belief_structure(["a", "b"], [(&["a"][..], r(1, 2)), (&["a", "b"][..], r(1, 2))]))?;
    ensure!(lib(mobius(&lib(bs.belief_function())?))? == lib(bs.mass_function())?, "belief masses");
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("EX1 golden values", criterion_1),
        ("definitional identities on 200 random spaces", criterion_2),
        ("approximation laws 1-15 on 100 partial monotone spaces", criterion_3),
        ("q_lower(∅) = 0 and q_lower(W) = 1 on 100 irreducible spaces", criterion_4),
        ("inclusion spaces induce their frequency masses", criterion_5),
        ("belief to space round trip on 100 structures", criterion_6),
        ("induced masses on 100 (belief, space) pairs", criterion_7),
        ("claim verification on EX1 and EX2", criterion_8),
        ("fast Möbius transform on 50 set functions", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("PASS criterion {}: {name} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
