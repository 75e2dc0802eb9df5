//! Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero when
//! any criterion fails.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::time::Instant;

use lattice_building::chain::{
    chains_through, check_maximal, check_saturated, classify_chain, enumerate_intermediate, maximal_chain_through,
    simplices_from_chain, vertex_classes_in_box, ChainSegment, ChainType,
};
use lattice_building::cli::run;
use lattice_building::complex::{
    build_apartment, link, link_residue, pgl2_lines, project_window, ApartmentSpec, Collapse, Window,
};
use lattice_building::gamma::{Full, Gamma, IdealClass, PartialInfinite, Principal};
use lattice_building::lattice::{
    components_include, components_to_string, ideal_to_string, ray_limit, Config, LatticeClass, RayBase, Stratum,
};
use lattice_building::parse::parse_lattice;
use lattice_building::weyl::{
    act, generator_ball, generators, involution_fixed_point, weyl_mul, weyl_order, FixedLocus, Order, WeylElement,
};
use lattice_building::Error;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(err: Error) -> String {
    err.to_string()
}

const C21: Config = Config::new(2, 1);
const C22: Config = Config::new(2, 2);
const C31: Config = Config::new(3, 1);
const C32: Config = Config::new(3, 2);

fn scaled_first(seg: &ChainSegment) -> Vec<IdealClass> {
    seg.entries[0]
        .comps
        .iter()
        .map(|c| lattice_building::gamma::ideal_translate(c, &seg.period).unwrap())
        .collect()
}

/// Enumerates every chain through every vertex class of the box and checks
/// that it classifies into exactly the type it was generated from.
fn classify_box(config: Config, bound: i64) -> Result<(usize, usize, BTreeMap<ChainType, usize>), String> {
    let vertices = vertex_classes_in_box(config, bound).map_err(e)?;
    let mut per_type = BTreeMap::new();
    let mut chains = 0;
    let mut seen = BTreeSet::new();
    for v in &vertices {
        for (t, seg) in chains_through(v).map_err(e)? {
            chains += 1;
            let got = classify_chain(&seg).map_err(|err| format!("chain through {v}: {seg}: {err}"))?;
            ensure(got == t, || format!("chain through {v} generated as {t} classified as {got}"))?;
            ensure(ChainType::for_config(config).contains(&got), || format!("{got} outside the tag set"))?;
            let simplices = simplices_from_chain(got, &seg).map_err(e)?;
            ensure(
                simplices.iter().all(|s| s.dim == got.simplex_dim()),
                || format!("{got} chain gave wrong simplex dimension"),
            )?;
            if seen.insert((t, seg.member_classes().map_err(e)?)) {
                *per_type.entry(t).or_insert(0) += 1;
            }
        }
        let (t, _) = maximal_chain_through(v).map_err(e)?;
        ensure(ChainType::for_config(config).contains(&t), || format!("{v}: {t}"))?;
    }
    Ok((vertices.len(), chains, per_type))
}

/// Saturation (window 3) and brute-force maximality of every canonical
/// segment and its permuted copies.
fn canonical_certificates(config: Config) -> Result<usize, String> {
    let mut checked = 0;
    for t in ChainType::for_config(config) {
        let canon = t.canonical();
        for perm in lattice_building::lattice::permutations(config.m) {
            let seg = canon.transform(&perm, &vec![config.zero(); config.m]).map_err(e)?;
            check_saturated(&seg, 3).map_err(e)?.map_err(|gap| format!("{t} perm {perm:?} not saturated: {gap}"))?;
            checked += 1;
        }
        check_maximal(&canon, 2)
            .map_err(e)?
            .map_err(|extra| format!("{t} is extended by {extra}"))?;
    }
    Ok(checked)
}

fn criterion_1() -> Outcome {
    let (n, chains, per_type) = classify_box(C32, 2)?;
    let tags: Vec<ChainType> = per_type.keys().copied().collect();
    ensure(tags == ChainType::for_config(C32), || format!("types seen: {tags:?}"))?;
    let p2i = ChainType::from_tag("P2-i").unwrap().canonical();
    let mut shown: Vec<String> = p2i.entries.iter().map(|x| components_to_string(&x.comps, 2)).collect();
    shown.push(components_to_string(&scaled_first(&p2i), 2));
    ensure(shown == ["<O|O|O>", "<M|O|O>", "<M|M|O>", "<M|M|M>"], || format!("P2-i displays {shown:?}"))?;
    let p2v = ChainType::from_tag("P2-v").unwrap().canonical();
    let shown = [
        components_to_string(&p2v.entries[0].comps, 2),
        components_to_string(&scaled_first(&p2v), 2),
    ];
    ensure(shown == ["<O|K|K>", "<M|K|K>"], || format!("P2-v displays {shown:?}"))?;
    let sat = canonical_certificates(C32)?;
    Ok(format!(
        "{n} vertex classes, {chains} chains, 5 types each unique ({}), {sat} saturated canonical segments",
        per_type.iter().map(|(t, k)| format!("{t}:{k}")).collect::<Vec<_>>().join(" ")
    ))
}

fn criterion_2() -> Outcome {
    let (n, chains, per_type) = classify_box(C31, 2)?;
    let tags: Vec<ChainType> = per_type.keys().copied().collect();
    ensure(tags == ChainType::for_config(C31), || format!("types seen: {tags:?}"))?;
    let dims: Vec<(String, usize)> = ChainType::for_config(C31).iter().map(|t| (t.tag().to_string(), t.simplex_dim())).collect();
    ensure(
        dims == [("P1-i".to_string(), 2), ("P1-ii".to_string(), 1), ("P1-iii".to_string(), 0)],
        || format!("{dims:?}"),
    )?;
    let p1ii = ChainType::from_tag("P1-ii").unwrap().canonical();
    let shown: Vec<String> = p1ii.entries.iter().map(|x| components_to_string(&x.comps, 1)).collect();
    ensure(shown == ["<O1|O1|F>", "<m^1|O1|F>"], || format!("P1-ii displays {shown:?}"))?;
    let sat = canonical_certificates(C31)?;
    Ok(format!(
        "{n} vertex classes, {chains} chains, 3 types each unique ({}), dims 2/1/0, {sat} saturated canonical segments",
        per_type.iter().map(|(t, k)| format!("{t}:{k}")).collect::<Vec<_>>().join(" ")
    ))
}

fn criterion_3() -> Outcome {
    let (n, chains, per_type) = classify_box(C22, 2)?;
    let tags: Vec<&str> = per_type.keys().map(|t| t.tag()).collect();
    ensure(tags == ["D5-i", "D5-ii", "D5-iv"], || format!("types seen: {tags:?}"))?;
    let o = Principal(Gamma::d2(0, 0));
    let hi = vec![o, PartialInfinite(0)];
    let lo = vec![o, PartialInfinite(1)];
    let mut between = enumerate_intermediate(&hi, &lo, 3, C22).map_err(e)?;
    // largest module first
    between.sort_by(|a, b| {
        if components_include(a, b).unwrap() {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    });
    let shown: Vec<String> = between.iter().map(|c| components_to_string(c, 2)).collect();
    let mut expect = vec!["<O|Oc>".to_string()];
    expect.extend((-3..=3).map(|i| components_to_string(&[o, Principal(Gamma::d2(i, 0))], 2)));
    expect.push("<O|Mc>".to_string());
    ensure(shown == expect, || format!("intermediate modules {shown:?}"))?;
    for w in between.windows(2) {
        ensure(components_include(&w[0], &w[1]).unwrap() && w[0] != w[1], || "not totally ordered".into())?;
    }
    let pos = |s: &str| shown.iter().position(|x| x == s);
    let (a, b, c) = (pos("<O|Oc>"), pos("<O|M>"), pos("<O|P(2,0)>"));
    ensure(
        a.is_some() && b.is_some() && c == b.map(|k| k + 1),
        || "display order O+𝒪 ⊃ … ⊃ O+P(1,0) ⊃ O+P(2,0) not found".into(),
    )?;
    // the segment is not stable under scaling: t1·(O+𝒪) = M+𝒪 misses O+P(2,0)
    let scaled = vec![Principal(Gamma::d2(1, 0)), PartialInfinite(0)];
    let p2 = vec![o, Principal(Gamma::d2(2, 0))];
    ensure(
        !components_include(&scaled, &p2).unwrap() && !components_include(&p2, &scaled).unwrap(),
        || "M+𝒪 and O+P(2,0) are comparable".into(),
    )?;
    ensure(ideal_to_string(&Principal(Gamma::d2(1, 0)), 2) == "M", || "P(1,0) does not print as M".into())?;
    ensure(
        parse_lattice("<O|P(1,0)>", None).map_err(e)? == parse_lattice("<O|M>", None).map_err(e)?,
        || "P(1,0) and M parse differently".into(),
    )?;
    Ok(format!(
        "{n} vertex classes, {chains} chains, 3 types each unique ({}); 𝒪 ⊃ P(i,0) ⊃ ℳ segment recovered for i in [-3,3], P(1,0) = M; segment not scaling-stable",
        per_type.iter().map(|(t, k)| format!("{t}:{k}")).collect::<Vec<_>>().join(" ")
    ))
}

fn full_pattern(l: &LatticeClass) -> Vec<bool> {
    l.components().iter().map(|c| c.is_full()).collect()
}

fn criterion_4() -> Outcome {
    let w = build_apartment(ApartmentSpec::new(C32, 2)).map_err(e)?;
    let p = project_window(&w).map_err(e)?;
    let mut tally: BTreeMap<(&str, Collapse), usize> = BTreeMap::new();
    let mut triangles = 0;
    for ps in &p.simplices {
        let s = &w.simplices[ps.source];
        if s.dim() != 2 {
            if s.chain_types.iter().any(|t| t.tag() == "P2-iv") {
                *tally.entry(("P2-iv", ps.collapse)).or_default() += 1;
            }
            continue;
        }
        triangles += 1;
        let [t] = s.chain_types.as_slice() else {
            return Err(format!("triangle {:?} has types {:?}", s.vertices, s.chain_types));
        };
        let want = match t.tag() {
            "P2-i" => Collapse::Point,
            "P2-ii" => Collapse::Edge,
            "P2-iii" => Collapse::Isomorphic,
            other => return Err(format!("triangle of type {other}")),
        };
        ensure(ps.collapse == want, || format!("{t} triangle {:?} became {:?}", s.vertices, ps.collapse))?;
        *tally.entry((t.tag(), ps.collapse)).or_default() += 1;
    }
    // renormalizing can double the radius of a class of the dim-2 box
    let target = build_apartment(ApartmentSpec::new(C31, 4)).map_err(e)?;
    for s in &p.image.simplices {
        let ids: Vec<usize> = s
            .vertices
            .iter()
            .map(|&v| {
                let c = &p.image.vertices[v].class;
                target.vertex_id(c).ok_or_else(|| format!("image vertex {c} missing from the dim-1 window"))
            })
            .collect::<Result<_, _>>()?;
        ensure(target.contains_simplex(&ids), || format!("image simplex {ids:?} missing from the dim-1 window"))?;
    }
    let mut corners = BTreeSet::new();
    let mut boundary = 0;
    for (v, vx) in w.vertices.iter().enumerate() {
        if vx.stratum != Stratum::Boundary {
            continue;
        }
        boundary += 1;
        let img = &p.image.vertices[p.vertex_map[v]];
        ensure(img.stratum == Stratum::Boundary, || format!("{} left the boundary", vx.class))?;
        ensure(full_pattern(&img.class) == full_pattern(&vx.class), || format!("{} changed its full positions", vx.class))?;
        if vx.type_code == "200" {
            ensure(corners.insert(img.class.clone()), || format!("corner {} collides", vx.class))?;
        }
    }
    ensure(corners.len() == 3, || format!("{} corner images", corners.len()))?;
    Ok(format!(
        "{triangles} triangles: {}; {boundary} external vertices keep stratum and full positions, 3 corners fixed",
        tally.iter().map(|((t, c), k)| format!("{t}->{c:?}:{k}")).collect::<Vec<_>>().join(" ")
    ))
}

/// The union of `{x : x ≥ b + t·δ}` over `t = 0..T` read back as an ideal,
/// one row of the value group at a time.
fn union_oracle(b: Gamma, delta: Gamma) -> IdealClass {
    const T: i64 = 30;
    const LIM: i64 = 20;
    const R: i64 = 10;
    if b.dim() == 1 {
        let low = (0..=T).map(|t| b.outer() + t * delta.outer()).min().unwrap();
        return if low <= -LIM { Full } else { Principal(Gamma::d1(low)) };
    }
    // per outer row: smallest inner exponent present, i64::MIN for the whole row
    let mut rows: BTreeMap<i64, i64> = BTreeMap::new();
    for t in 0..=T {
        let g = b + delta.scale(t);
        for j in -R..=R {
            let v = if j > g.outer() {
                i64::MIN
            } else if j == g.outer() {
                g.inner()
            } else {
                continue;
            };
            let r = rows.entry(j).or_insert(i64::MAX);
            *r = (*r).min(v);
        }
    }
    let (&low, &inner) = rows.iter().next().expect("nonempty union");
    assert!(rows.range(low + 1..).all(|(_, &v)| v == i64::MIN || v <= -LIM));
    if inner == i64::MIN || inner <= -LIM {
        if low == -R {
            Full
        } else {
            PartialInfinite(low)
        }
    } else {
        Principal(Gamma::d2(inner, low))
    }
}

fn gammas(dim: u8) -> Vec<Gamma> {
    match dim {
        1 => (-2..=2).map(Gamma::d1).collect(),
        _ => (-2..=2).flat_map(|j| (-2..=2).map(move |i| Gamma::d2(i, j))).collect(),
    }
}

fn unit_dirs(dim: u8) -> Vec<Gamma> {
    match dim {
        1 => (-1..=1).map(Gamma::d1).collect(),
        _ => (-1..=1).flat_map(|j| (-1..=1).map(move |i| Gamma::d2(i, j))).collect(),
    }
}

fn product<T: Clone>(opts: &[T], m: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|p| {
                opts.iter().map(move |o| {
                    let mut q = p.clone();
                    q.push(o.clone());
                    q
                })
            })
            .collect();
    }
    out
}

/// Exhaustive comparison of `ray_limit` with the union oracle.
fn ray_sweep(config: Config, with_full: bool) -> Result<usize, String> {
    let mut base_opts: Vec<RayBase> = gammas(config.dim).into_iter().map(Some).collect();
    if with_full {
        base_opts.push(None);
    }
    let dirs = product(&unit_dirs(config.dim), config.m);
    let mut cache: HashMap<(Gamma, Gamma), IdealClass> = HashMap::new();
    let mut cases = 0;
    for base in product(&base_opts, config.m) {
        let live: Vec<usize> = (0..config.m).filter(|&k| base[k].is_some()).collect();
        if live.is_empty() {
            continue;
        }
        for d in &dirs {
            if (0..config.m).any(|k| base[k].is_none() && !d[k].is_zero()) {
                continue;
            }
            cases += 1;
            let got = ray_limit(&base, d, config);
            let d_max = live.iter().map(|&k| d[k]).max().unwrap();
            if live.iter().all(|&k| d[k] == d_max) {
                ensure(got == Err(Error::ConstantDirection), || format!("{base:?} {d:?}: expected no limit"))?;
                continue;
            }
            let comps: Vec<IdealClass> = (0..config.m)
                .map(|k| match base[k] {
                    None => Full,
                    Some(b) => *cache.entry((b, d[k] - d_max)).or_insert_with(|| union_oracle(b, d[k] - d_max)),
                })
                .collect();
            let want = LatticeClass::new(comps, config).map_err(e)?;
            ensure(got.as_ref() == Ok(&want), || format!("base {base:?} dir {d:?}: got {got:?}, oracle {want}"))?;
        }
    }
    Ok(cases)
}

fn criterion_5() -> Outcome {
    let m1 = |i: i64| Principal(Gamma::d1(i));
    for i in -3..=3 {
        for j in -3..=3 {
            let base = [Some(Gamma::d1(0)), Some(Gamma::d1(i)), Some(Gamma::d1(j))];
            let down = ray_limit(&base, &[Gamma::d1(0), Gamma::d1(0), Gamma::d1(-1)], C31).map_err(e)?;
            let want = LatticeClass::new(vec![m1(0), m1(i), Full], C31).map_err(e)?;
            ensure(down == want, || format!("j -> -inf from (0,{i},{j}): {down}"))?;
        }
        let base = [Some(Gamma::d1(0)), Some(Gamma::d1(i)), Some(Gamma::d1(0))];
        let up = ray_limit(&base, &[Gamma::d1(0), Gamma::d1(0), Gamma::d1(1)], C31).map_err(e)?;
        let want = LatticeClass::new(vec![Full, Full, m1(0)], C31).map_err(e)?;
        ensure(up == want, || format!("j -> +inf from (0,{i},0): {up}"))?;
    }
    let mut total = 0;
    let mut parts = Vec::new();
    for (config, with_full) in [(C21, true), (C31, true), (C22, true), (C32, false)] {
        let n = ray_sweep(config, with_full)?;
        parts.push(format!("m={} dim={}: {n}", config.m, config.dim));
        total += n;
    }
    Ok(format!("both displayed limits for i in [-3,3]; oracle agrees on {total} rays ({})", parts.join(", ")))
}

/// Incident (line, plane) pairs over `F_q` counted from all nonzero vectors.
fn flag_oracle(q: u64) -> u64 {
    let vecs: Vec<[u64; 3]> = (1..q * q * q).map(|n| [n % q, n / q % q, n / (q * q)]).collect();
    let mut incident = 0u64;
    for v in &vecs {
        for h in &vecs {
            if (v[0] * h[0] + v[1] * h[1] + v[2] * h[2]) % q == 0 {
                incident += 1;
            }
        }
    }
    incident / ((q - 1) * (q - 1))
}

fn line_oracle(q: u64) -> u64 {
    let mut orbits = BTreeSet::new();
    for n in 1..q * q {
        let v = [n % q, n / q];
        let orbit: BTreeSet<[u64; 2]> = (1..q).map(|s| [v[0] * s % q, v[1] * s % q]).collect();
        orbits.insert(orbit);
    }
    orbits.len() as u64
}

fn criterion_6() -> Outcome {
    let w = build_apartment(ApartmentSpec::new(C31, 2)).map_err(e)?;
    let mut hexagons = 0;
    let mut truncated = 0;
    for (v, vx) in w.vertices.iter().enumerate() {
        if vx.stratum != Stratum::Inner {
            continue;
        }
        match link(&w, v) {
            Ok(l) => {
                ensure(l.counts() == [6, 6, 0] && l.is_cycle(), || format!("link of {} is {:?}", vx.class, l.counts()))?;
                hexagons += 1;
            }
            Err(Error::TruncatedStar(_)) => truncated += 1,
            Err(err) => return Err(err.to_string()),
        }
    }
    ensure(hexagons == 9, || format!("{hexagons} full-star vertices"))?;
    let x2 = LatticeClass::new(vec![Principal(Gamma::d1(0)); 2], C21).map_err(e)?;
    let x3 = LatticeClass::new(vec![Principal(Gamma::d1(0)); 3], C31).map_err(e)?;
    for q in [2u64, 3, 5, 7] {
        let points = link_residue(&x2, q).map_err(e)?.vertex_count() as u64;
        ensure(points == q + 1 && points == line_oracle(q), || format!("q={q}: {points} points"))?;
        let flags = link_residue(&x3, q).map_err(e)?.edge_count() as u64;
        ensure(
            flags == (q * q + q + 1) * (q + 1) && flags == flag_oracle(q),
            || format!("q={q}: {flags} flags"),
        )?;
    }
    Ok(format!("{hexagons} full-star inner vertices have hexagon links ({truncated} truncated skipped); residue counts exact for q in 2,3,5,7"))
}

fn check_weyl_config(config: Config) -> Result<(usize, usize), String> {
    for g in generators(config).map_err(e)? {
        ensure(weyl_order(&g) == Order::Finite(2), || format!("{g} has order {}", weyl_order(&g)))?;
    }
    let ball = generator_ball(config, 3).map_err(e)?;
    let perms: BTreeSet<Vec<usize>> = ball.iter().map(|w| w.project()).collect();
    ensure(perms.len() == lattice_building::lattice::permutations(config.m).len(), || "projection not onto".into())?;
    for u in &ball {
        ensure(u.is_translation() == (u.project() == (0..config.m).collect::<Vec<_>>()), || format!("{u}"))?;
        for v in &ball {
            let uv = weyl_mul(u, v).map_err(e)?;
            let composed: Vec<usize> = v.project().iter().map(|&k| u.project()[k]).collect();
            ensure(uv.project() == composed, || format!("projection of {u} * {v}"))?;
        }
    }
    let window = build_apartment(ApartmentSpec::new(config, 2)).map_err(e)?;
    let mut checks = 0;
    for u in &ball {
        for v in &ball {
            let uv = weyl_mul(u, v).map_err(e)?;
            for vx in &window.vertices {
                let lhs = act(&uv, &vx.class).map_err(e)?;
                let rhs = act(u, &act(v, &vx.class).map_err(e)?).map_err(e)?;
                ensure(lhs == rhs, || format!("act({u} * {v}) differs on {}", vx.class))?;
                checks += 1;
            }
        }
    }
    // the section acts on translations by permuting coordinates
    for s in lattice_building::lattice::permutations(config.m) {
        let sec = WeylElement::new(config, s.clone(), vec![config.zero(); config.m]).map_err(e)?;
        for t in ball.iter().filter(|w| w.is_translation()) {
            let conj = weyl_mul(&weyl_mul(&sec, t).map_err(e)?, &sec.inverse()).map_err(e)?;
            let expect = WeylElement::translation(config, lattice_building::lattice::permute_components(t.trans(), &s))
                .map_err(e)?;
            ensure(conj == expect, || format!("conjugating {t} by {sec}"))?;
        }
    }
    Ok((ball.len(), checks))
}

fn criterion_7() -> Outcome {
    let mut parts = Vec::new();
    for config in [C21, C22, C31, C32] {
        let (b, checks) = check_weyl_config(config)?;
        parts.push(format!("m={} dim={}: ball {b}, {checks} actions", config.m, config.dim));
    }
    // translation rules along a PGL(2) line of the dim-2 apartment
    let w = build_apartment(ApartmentSpec::new(C22, 3)).map_err(e)?;
    let p = |i, j| Principal(Gamma::d2(i, j));
    let cls = |c: Vec<IdealClass>| LatticeClass::new(c, C22).unwrap();
    let x = |i, n| cls(vec![p(0, 0), p(i, n)]);
    let y = |n: i64| cls(vec![PartialInfinite(-n), p(0, 0)]);
    let z = |n: i64| cls(vec![p(0, 0), PartialInfinite(n)]);
    let inner_shift = WeylElement::translation(C22, vec![Gamma::d2(-1, 0), Gamma::d2(1, 0)]).map_err(e)?;
    let outer_shift = WeylElement::translation(C22, vec![Gamma::d2(0, -1), Gamma::d2(0, 1)]).map_err(e)?;
    for n in -3..=3 {
        for i in -3..=3 {
            ensure(act(&inner_shift, &x(i, n)).map_err(e)? == x(i + 2, n), || format!("inner shift on x_{i},{n}"))?;
            ensure(act(&outer_shift, &x(i, n)).map_err(e)? == x(i, n + 2), || format!("outer shift on x_{i},{n}"))?;
        }
        ensure(act(&inner_shift, &y(n)).map_err(e)? == y(n), || format!("inner shift moved y_{n}"))?;
        ensure(act(&inner_shift, &z(n)).map_err(e)? == z(n), || format!("inner shift moved z_{n}"))?;
        ensure(act(&outer_shift, &y(n)).map_err(e)? == y(n + 2), || format!("outer shift on y_{n}"))?;
        ensure(act(&outer_shift, &z(n)).map_err(e)? == z(n + 2), || format!("outer shift on z_{n}"))?;
    }
    let origin = w.vertex_id(&x(0, 0)).unwrap();
    let line = &pgl2_lines(&w, origin).map_err(e)?[0];
    for n in -2..=2 {
        let (yi, zi) = (w.vertex_id(&y(n)).unwrap(), w.vertex_id(&z(n + 1)).unwrap());
        let (a, b) = (line.iter().position(|&v| v == yi), line.iter().position(|&v| v == zi));
        ensure(a.is_some() && b == a.map(|k| k + 1), || format!("y_{n}, z_{} not consecutive on the line", n + 1))?;
    }
    // every inner-boundary class of the m=2 window is fixed by inner shifts
    // and has its partially infinite exponent moved by one under a unit
    // outer shift of that coordinate
    let mut ib = 0;
    for vx in w.vertices.iter().filter(|v| v.stratum == Stratum::InnerBoundary) {
        ib += 1;
        ensure(act(&inner_shift, &vx.class).map_err(e)? == vx.class, || format!("inner shift moved {}", vx.class))?;
        let k = vx.class.components().iter().position(|c| matches!(c, PartialInfinite(_))).unwrap();
        let mut tau = vec![Gamma::d2(0, 0); 2];
        tau[k] = Gamma::d2(0, 1);
        let moved = act(&WeylElement::translation(C22, tau).map_err(e)?, &vx.class).map_err(e)?;
        let PartialInfinite(j0) = vx.class.components()[k] else { unreachable!() };
        ensure(moved.components()[k] == PartialInfinite(j0 + 1), || format!("outer shift on {} gave {moved}", vx.class))?;
    }
    // the involution law on the tree
    let xi = |i: i64| LatticeClass::new(vec![Principal(Gamma::d1(0)), Principal(Gamma::d1(i))], C21).unwrap();
    let mut vertices = 0;
    let mut midpoints = 0;
    for c in -6..=6 {
        let w = WeylElement::new(C21, vec![1, 0], vec![Gamma::d1(0), Gamma::d1(c)]).map_err(e)?;
        match involution_fixed_point(&w).map_err(e)? {
            Some(FixedLocus::Vertex(i0)) => {
                vertices += 1;
                for i in -5..=5 {
                    ensure(act(&w, &xi(i + i0)).map_err(e)? == xi(i0 - i), || format!("c={c}, i={i}"))?;
                }
            }
            Some(FixedLocus::EdgeMidpoint(i0)) => {
                midpoints += 1;
                for i in -5..=5 {
                    ensure(act(&w, &xi(i0 + 1 + i)).map_err(e)? == xi(i0 - i), || format!("c={c}, i={i}"))?;
                }
            }
            None => return Err(format!("c={c}: no fixed point")),
        }
    }
    Ok(format!(
        "generators of order 2, projection onto with translation kernel, section permutes translations; {}; shifts on x/y/z and {ib} inner-boundary classes; involution law for {vertices} vertex and {midpoints} midpoint cases",
        parts.join(", ")
    ))
}

fn embeds(small: &Window, big: &Window) -> Result<(), String> {
    let map: Vec<usize> = small
        .vertices
        .iter()
        .map(|v| big.vertex_id(&v.class).ok_or_else(|| format!("{} missing", v.class)))
        .collect::<Result<_, _>>()?;
    for s in &small.simplices {
        let img: Vec<usize> = s.vertices.iter().map(|&v| map[v]).collect();
        ensure(big.contains_simplex(&img), || format!("simplex {:?} missing", s.vertices))?;
    }
    let back: BTreeMap<usize, usize> = map.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    for s in &big.simplices {
        if let Some(pre) = s.vertices.iter().map(|v| back.get(v).copied()).collect::<Option<Vec<usize>>>() {
            ensure(small.contains_simplex(&pre), || format!("not full: {:?}", s.vertices))?;
        }
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let mut edges = 0;
    for config in Config::AFFINE {
        let windows: Vec<Window> = (1..=4)
            .map(|n| build_apartment(ApartmentSpec::new(config, n)))
            .collect::<lattice_building::Result<_>>()
            .map_err(e)?;
        for (n, pair) in windows.windows(2).enumerate() {
            embeds(&pair[0], &pair[1]).map_err(|m| format!("m={} dim={} N={}: {m}", config.m, config.dim, n + 1))?;
        }
        for w in &windows {
            ensure(w.is_closed(), || format!("m={} dim={} N={} not closed", config.m, config.dim, w.spec.bound))?;
        }
        let w = windows.last().unwrap();
        for s in w.simplices_of_dim(1) {
            let (a, b) = (&w.vertices[s.vertices[0]].class, &w.vertices[s.vertices[1]].class);
            ensure(lattice_building::chain::adjacent(a, b).map_err(e)?, || format!("edge {a} {b} fails adjacency"))?;
            edges += 1;
        }
    }
    Ok(format!("N -> N+1 full embeddings for N in 1..3 in all four configurations, closed under faces, {edges} edges adjacent"))
}

fn criterion_9() -> Outcome {
    let mut n = 0;
    for config in Config::AFFINE {
        let w = build_apartment(ApartmentSpec::new(config, 3)).map_err(e)?;
        for v in &w.vertices {
            let text = v.class.to_string();
            let back = parse_lattice(&text, None).map_err(|err| format!("{text}: {err}"))?;
            ensure(back == v.class, || format!("{text} read back as {back}"))?;
            n += 1;
        }
    }
    let mut docs = 0;
    for (m, dim) in [("2", "1"), ("2", "2"), ("3", "1"), ("3", "2")] {
        for format in ["json", "dot"] {
            let args = ["ltb", "--m", m, "--dim", dim, "--N", "2", "--format", format, "apartment"];
            let a = run(args)?;
            let b = run(args)?;
            ensure(a == b && !a.is_empty(), || format!("{args:?} not reproducible"))?;
            docs += 1;
        }
    }
    Ok(format!("{n} window vertices round-trip; {docs} JSON/DOT documents byte-identical across runs"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("maximal chains, m=3 dim=2", criterion_1),
        ("maximal chains, m=3 dim=1", criterion_2),
        ("maximal chains, m=2 dim=2", criterion_3),
        ("projection of the m=3 dim=2 window", criterion_4),
        ("boundary convergence", criterion_5),
        ("links and residues", criterion_6),
        ("Weyl group", criterion_7),
        ("window functoriality and closure", criterion_8),
        ("CLI round trip and determinism", criterion_9),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        let outcome = outcome.and_then(|msg| {
            if secs < 60.0 {
                Ok(msg)
            } else {
                Err(format!("took {secs:.1}s, over the 60s budget; {msg}"))
            }
        });
        match outcome {
            Ok(msg) => println!("PASS {} {name}: {msg} [{secs:.2}s]", k + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {} {name}: {msg} [{secs:.2}s]", k + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
