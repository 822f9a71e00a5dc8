//! The claim registry. Each claim has a stable id, the statement it checks,
//! and the genus it needs; `verify all` skips claims above the ceiling.

use std::fmt::Write as _;
use std::time::Instant;

use crosscap_core::gf2::BitMatrix;
use crosscap_core::mcg::{
    check_relations, epsilon, expected_relations, homology_rep, twist_name, Flavor, GeneratorSystem, Relation, U,
    U_SQUARED,
};
use crosscap_core::perm::{
    commutator, commutator_subgroup, conjugate_subgroups, conjugating_element, is_transitive, normal_closure,
    GroupElement, PermGroup, PermRep, Permutation,
};
use crosscap_core::symp::{
    adjacent_transposition_labels, alpha_generator_images, alpha_twisted_subgroup, build_sp, form_action,
    form_orbit_action, is_inner, m_indices, orthogonal_stabilizer, sp_order, AutomorphismTable, S6Identification,
};
use crosscap_core::verify::{
    build_phi, extension_solve, stated_centralizers, replay, restriction_orbits, CentralizerCheck, PhiTable, Sign,
    TableName, TABLE_NAMES,
};
use crosscap_core::{Error, Result};

use crate::report::{ClaimReport, Status};

/// Tables the claims read. Fault injection swaps one for a broken copy.
#[derive(Clone, Debug)]
pub struct Inputs {
    tables: Vec<PhiTable>,
}

impl Inputs {
    pub fn builtin() -> Self {
        Inputs { tables: TableName::ALL.into_iter().map(PhiTable::builtin).collect() }
    }

    /// The builtin tables with `T4` of `name` replaced by `(1 2)`.
    pub fn corrupted(name: TableName) -> Self {
        let mut inputs = Inputs::builtin();
        for table in inputs.tables.iter_mut().filter(|t| t.name == name) {
            let degree = table.rep.degree();
            let broken = Permutation::parse_cycles("(1 2)", degree).expect("degree at least 2");
            let pairs: Vec<(String, Permutation)> = table
                .rep
                .iter()
                .map(|(n, x)| (n.to_string(), if n == "T4" { broken.clone() } else { x.clone() }))
                .collect();
            table.rep = PermRep::from_pairs(degree, pairs).expect("same names");
        }
        inputs
    }

    pub fn table(&self, name: TableName) -> &PhiTable {
        self.tables.iter().find(|t| t.name == name).expect("all tables present")
    }
}

pub struct Outcome {
    pub pass: bool,
    pub witness: String,
}

impl Outcome {
    fn new(pass: bool, witness: impl Into<String>) -> Self {
        Outcome { pass, witness: witness.into() }
    }
}

type Check = Box<dyn Fn(&Inputs) -> Result<Outcome> + Send + Sync>;

pub struct Claim {
    pub id: String,
    pub statement: String,
    pub genus: usize,
    check: Check,
}

impl Claim {
    fn new(id: impl Into<String>, statement: impl Into<String>, genus: usize, check: Check) -> Self {
        Claim { id: id.into(), statement: statement.into(), genus, check }
    }

    pub fn run(&self, inputs: &Inputs, timed: bool) -> ClaimReport {
        let start = Instant::now();
        let (status, witness) = match (self.check)(inputs) {
            Ok(o) => (if o.pass { Status::Pass } else { Status::Fail }, o.witness),
            Err(e) => (Status::Fail, format!("error: {e}")),
        };
        ClaimReport {
            claim: self.id.clone(),
            paper_ref: self.statement.clone(),
            status,
            witness,
            ms: timed.then(|| start.elapsed().as_millis() as u64),
        }
    }

    pub fn skipped(&self) -> ClaimReport {
        ClaimReport {
            claim: self.id.clone(),
            paper_ref: self.statement.clone(),
            status: Status::Skipped,
            witness: format!("needs genus {}", self.genus),
            ms: None,
        }
    }
}

/// Every claim, sorted by id.
pub fn registry() -> Vec<Claim> {
    let mut claims = Vec::new();
    for g in 2..=5 {
        claims.push(Claim::new(
            format!("indices_g{g}"),
            "Sp(2g,2) acts on quadratic refinements with orbits of sizes m_g^- = 2^(g-1)(2^g-1) and m_g^+ = 2^(g-1)(2^g+1)",
            g,
            Box::new(move |_| indices(g)),
        ));
        claims.push(Claim::new(
            format!("involutions_g{g}"),
            "every twist generator is sent to an involution by the representations of index m_g^-, m_g^+",
            g,
            Box::new(move |_| involutions(g)),
        ));
    }
    for name in TableName::ALL {
        claims.push(Claim::new(
            format!("tables_{}", name.as_str()),
            "the displayed table satisfies the braid and commutation relations of T0..T4 and is transitive",
            2,
            Box::new(move |inputs| table_relations(inputs.table(name))),
        ));
    }
    claims.push(Claim::new(
        "phi2_minus_conjugate",
        "the index-6 representation of the genus-2 group is conjugate to the displayed minus table",
        2,
        Box::new(|inputs| built_matches_table(inputs, Sign::Minus, TableName::Phi2Minus)),
    ));
    claims.push(Claim::new(
        "phi2_plus_conjugate",
        "the index-10 representation of the genus-2 group is conjugate to the displayed plus table",
        2,
        Box::new(|inputs| built_matches_table(inputs, Sign::Plus, TableName::Phi2Plus)),
    ));
    claims.push(Claim::new(
        "phi1_alpha_not_conjugate",
        "the alpha-twisted table is transitive of degree 6 and not conjugate to the minus table",
        2,
        Box::new(alpha_table_distinct),
    ));
    claims.push(Claim::new(
        "alpha_automorphism",
        "alpha sends each adjacent transposition to a triple transposition and extends to an automorphism of S6",
        2,
        Box::new(|_| alpha_automorphism()),
    ));
    claims.push(Claim::new(
        "alpha_noninner",
        "alpha is a noninner automorphism of S6",
        2,
        Box::new(|_| alpha_noninner()),
    ));
    claims.push(Claim::new(
        "alpha_square_inner",
        "alpha squared is inner",
        2,
        Box::new(|_| alpha_square_inner()),
    ));
    claims.push(Claim::new(
        "alpha_o_minus_not_conjugate",
        "alpha(O^-(4,2)) has order 120 and index 6 in Sp(4,2) = S6 and is not conjugate to O^-(4,2)",
        2,
        Box::new(|_| alpha_o_minus()),
    ));
    claims.push(Claim::new(
        "alpha_o_plus_conjugate",
        "alpha(O^+(4,2)) is conjugate to O^+(4,2) in Sp(4,2) = S6",
        2,
        Box::new(|_| alpha_o_plus()),
    ));
    for g in 2..=4 {
        claims.push(Claim::new(
            format!("centralizers_g{g}"),
            "C{w1,w2,w4} = {1,w4} at g=2; C{w0..w_(2g-1)} = {1,w_(2g+2)}; C{w0..w_(2g-2),w_(2g)} = {1,w_(2g)} for g>=3; the centralizer of all images is trivial",
            g,
            Box::new(move |inputs| centralizers(inputs, g)),
        ));
    }
    for g in 3..=4 {
        claims.push(Claim::new(
            format!("restriction_orbits_g{g}"),
            "restricted to the genus-(g-1) subsurface, the minus representation splits as three minus orbits and one plus orbit, and the plus representation as three plus and one minus",
            g,
            Box::new(move |_| restriction(g)),
        ));
    }
    for h in 5..=12 {
        let g = (h - 1) / 2;
        claims.push(Claim::new(
            format!("epsilon_surjective_h{h}"),
            "the homology representation maps the mapping class group onto Sp(2g,2)",
            g,
            Box::new(move |_| epsilon_onto(h)),
        ));
        claims.push(Claim::new(
            format!("twist_image_order_h{h}"),
            "the twist subgroup acts on mod-2 homology with image of order |Sp(2g,2)| 2^(2g+1) for even h and |Sp(2g,2)| for odd h",
            g,
            Box::new(move |_| twist_image_order(h)),
        ));
    }
    for g in 2..=3 {
        claims.push(Claim::new(
            format!("extension_g{g}"),
            "U = w_(2g) for r=1 and w_(2g+2) for r=2; U^2 = 1 in the twist flavor; T_(2g+1) = w_(2g+2); UT0U^-1 = w4 w0 w4 at h=5; each extension is unique",
            g,
            Box::new(move |inputs| extensions(inputs, g)),
        ));
        claims.push(Claim::new(
            format!("extension_consistency_g{g}"),
            "the unique extension of index m_g^-, m_g^+ is the action on refinements through homology",
            g,
            Box::new(move |_| extension_consistency(g)),
        ));
        claims.push(Claim::new(
            format!("normal_closure_g{g}"),
            "the normal closure of one commutator of braided twists is the commutator subgroup of the image",
            g,
            Box::new(move |_| closure(g)),
        ));
    }
    claims.push(Claim::new(
        "replay_odd_minus",
        "w'3 = (3 5)tau and w'0 = (4 6)tau",
        2,
        Box::new(|_| odd_minus()),
    ));
    claims.push(Claim::new("replay_even_minus", "w5 = (5 6)tau", 2, Box::new(|_| even_minus())));
    claims.push(Claim::new(
        "replay_odd_alpha",
        "every solution preserves X = S(w2 w1)",
        2,
        Box::new(|_| odd_alpha()),
    ));
    claims.push(Claim::new(
        "arithmetic_guard",
        "5 m_(g-1)^- > m_g^+ for g >= 4",
        0,
        Box::new(|_| arithmetic_guard()),
    ));
    claims.sort_by(|a, b| a.id.cmp(&b.id));
    claims
}

pub fn find(id: &str) -> Option<Claim> {
    registry().into_iter().find(|c| c.id == id)
}

/// Runs every claim of genus at most `max_genus` on worker threads. Reports
/// come back in id order.
pub fn run_all(max_genus: usize, inputs: &Inputs, timed: bool) -> Vec<ClaimReport> {
    let claims = registry();
    std::thread::scope(|scope| {
        let handles: Vec<_> = claims
            .iter()
            .map(|c| {
                scope.spawn(move || if c.genus > max_genus { c.skipped() } else { c.run(inputs, timed) })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("claim thread panicked")).collect()
    })
}

fn names(list: &[&str]) -> String {
    list.join(", ")
}

fn set(elements: &[Permutation]) -> String {
    let parts: Vec<String> =
        elements.iter().map(|x| if x.is_identity() { "1".into() } else { x.to_string() }).collect();
    format!("{{{}}}", parts.join(", "))
}

fn vector_group(mats: &[BitMatrix]) -> Result<PermGroup> {
    let degree = (1usize << mats[0].dim()) - 1;
    PermGroup::new(degree, mats.iter().map(|m| m.nonzero_vector_action()).collect())
}

fn indices(g: usize) -> Result<Outcome> {
    let model = build_sp(g)?;
    let found = (
        form_orbit_action(&model, true)?.degree() as u128,
        form_orbit_action(&model, false)?.degree() as u128,
    );
    Ok(Outcome::new(found == m_indices(g), format!("({}, {})", found.0, found.1)))
}

fn involutions(g: usize) -> Result<Outcome> {
    let mut pass = true;
    let mut witness = Vec::new();
    for sign in [Sign::Minus, Sign::Plus] {
        let rep = build_phi(g, sign)?;
        let bad: Vec<&str> = rep.iter().filter(|(_, x)| !x.compose(x).is_identity()).map(|(n, _)| n).collect();
        pass &= bad.is_empty();
        witness.push(if bad.is_empty() {
            format!("phi_{sign}: {} involutions on {} points", rep.len(), rep.degree())
        } else {
            format!("phi_{sign}: not involutions {}", names(&bad))
        });
    }
    Ok(Outcome::new(pass, witness.join("; ")))
}

/// Braid and commutation relations among `T0 .. T4`.
fn twist_catalogue() -> Result<Vec<Relation>> {
    Ok(expected_relations(5, Flavor::M)?
        .into_iter()
        .filter(|r| r.x.names().chain(r.y.names()).all(|n| TABLE_NAMES.contains(&n)))
        .collect())
}

fn table_relations(table: &PhiTable) -> Result<Outcome> {
    let rels = twist_catalogue()?;
    let report = check_relations(&table.rep, &rels)?;
    let expected_degree = match table.name {
        TableName::Phi2Plus => 10,
        _ => 6,
    };
    let transitive = is_transitive(table.rep.degree(), &table.rep.permutations());
    let failed: Vec<String> = report.failures().map(|r| r.to_string()).collect();
    let pass = failed.is_empty() && transitive && table.rep.degree() == expected_degree;
    let mut witness = format!(
        "degree {}, {}transitive, {}/{} relations hold",
        table.rep.degree(),
        if transitive { "" } else { "not " },
        rels.len() - failed.len(),
        rels.len()
    );
    if let Some(first) = failed.first() {
        let _ = write!(witness, "; fails {first}");
    }
    Ok(Outcome::new(pass, witness))
}

fn built_matches_table(inputs: &Inputs, sign: Sign, name: TableName) -> Result<Outcome> {
    let built = build_phi(2, sign)?.restrict(&TABLE_NAMES)?;
    let table = &inputs.table(name).rep;
    if built.degree() != table.degree() {
        return Ok(Outcome::new(false, format!("degrees {} and {}", built.degree(), table.degree())));
    }
    Ok(match conjugating_element(table, &built)? {
        Some(y) => Outcome::new(true, format!("conjugator {y}")),
        None => Outcome::new(false, "not conjugate"),
    })
}

fn alpha_table_distinct(inputs: &Inputs) -> Result<Outcome> {
    let alpha = &inputs.table(TableName::Phi1Alpha).rep;
    let minus = &inputs.table(TableName::Phi2Minus).rep;
    let built = build_phi(2, Sign::Minus)?.restrict(&TABLE_NAMES)?;
    let transitive = is_transitive(alpha.degree(), &alpha.permutations());
    let conj_table = conjugating_element(minus, alpha)?;
    let conj_built = conjugating_element(&built, alpha)?;
    let pass = transitive && alpha.degree() == 6 && conj_table.is_none() && conj_built.is_none();
    let witness = match conj_table.or(conj_built) {
        Some(y) => format!("conjugate via {y}"),
        None => format!("degree {}, {}transitive, no conjugator", alpha.degree(), if transitive { "" } else { "not " }),
    };
    Ok(Outcome::new(pass, witness))
}

fn alpha_automorphism() -> Result<Outcome> {
    let images = alpha_generator_images();
    let t = AutomorphismTable::from_generator_images(&images)?;
    let gens = adjacent_transposition_labels().permutations();
    let mut coxeter = true;
    for (i, a) in gens.iter().enumerate() {
        let ta = t.apply(a);
        coxeter &= ta.compose(ta).is_identity() && ta.cycles().len() == 3;
        for (j, b) in gens.iter().enumerate().skip(i + 1) {
            let tb = t.apply(b);
            coxeter &= if j == i + 1 {
                ta.compose(tb).compose(ta) == tb.compose(ta).compose(tb)
            } else {
                ta.commutes_with(tb)
            };
        }
    }
    let pass = coxeter && t.is_bijective() && t.is_multiplicative_on(&gens);
    let witness: Vec<String> = gens.iter().map(|s| format!("{s} -> {}", t.apply(s))).collect();
    Ok(Outcome::new(pass, witness.join(", ")))
}

fn alpha() -> Result<AutomorphismTable> {
    AutomorphismTable::from_generator_images(&alpha_generator_images())
}

fn alpha_noninner() -> Result<Outcome> {
    Ok(match is_inner(&alpha()?) {
        None => Outcome::new(true, "no conjugator among the 720 elements"),
        Some(c) => Outcome::new(false, format!("inner via {c}")),
    })
}

fn alpha_square_inner() -> Result<Outcome> {
    let t = alpha()?;
    Ok(match is_inner(&t.compose(&t)) {
        Some(c) => Outcome::new(true, format!("conjugation by {c}")),
        None => Outcome::new(false, "not inner"),
    })
}

fn mapped_stabilizer(arf: bool) -> Result<PermGroup> {
    let model = build_sp(2)?;
    let ident = S6Identification::new(&model)?;
    ident.map_group(&model, &orthogonal_stabilizer(&model, &model.canonical_form(arf))?)
}

fn alpha_o_minus() -> Result<Outcome> {
    let model = build_sp(2)?;
    let o_minus = mapped_stabilizer(true)?;
    let twisted = alpha_twisted_subgroup(&model)?;
    let order = twisted.order();
    let index = sp_order(2) / order;
    let conj = conjugate_subgroups(&PermGroup::symmetric(6), &o_minus, &twisted);
    let pass = order == 120 && index == 6 && conj.is_none();
    let witness = match conj {
        Some(c) => format!("order {order} index {index}, conjugate via {c}"),
        None => format!(
            "order {order} index {index}, {} against the point stabilizer, not conjugate",
            if twisted.is_transitive() { "transitive" } else { "intransitive" }
        ),
    };
    Ok(Outcome::new(pass, witness))
}

fn alpha_o_plus() -> Result<Outcome> {
    let o_plus = mapped_stabilizer(false)?;
    let twisted = alpha()?.image_of_group(&o_plus)?;
    Ok(match conjugate_subgroups(&PermGroup::symmetric(6), &o_plus, &twisted) {
        Some(c) => Outcome::new(twisted.order() == 72, format!("order {}, conjugator {c}", twisted.order())),
        None => Outcome::new(false, format!("order {}, not conjugate", twisted.order())),
    })
}

fn describe(label: &str, check: &CentralizerCheck) -> String {
    if check.holds() {
        format!("{label} {}", set(&check.elements))
    } else if check.elements.is_empty() {
        format!("{label} order {} expected {}", check.order, set(&check.expected))
    } else {
        format!("{label} {} expected {}", set(&check.elements), set(&check.expected))
    }
}

fn centralizers(inputs: &Inputs, g: usize) -> Result<Outcome> {
    let mut sources: Vec<(String, PermRep)> =
        [Sign::Minus, Sign::Plus].iter().map(|&s| Ok((format!("phi_{s}"), build_phi(g, s)?))).collect::<Result<_>>()?;
    let mut alpha_source = None;
    if g == 2 {
        sources.push(("phi2_minus".into(), inputs.table(TableName::Phi2Minus).with_alias()));
        alpha_source = Some(inputs.table(TableName::Phi1Alpha).with_alias());
    }
    let mut pass = true;
    let mut witness = Vec::new();
    for (label, rep) in &sources {
        let l = stated_centralizers(g, rep)?;
        pass &= l.holds();
        let mut parts = Vec::new();
        if let Some(a) = &l.a {
            parts.push(describe("(a)", a));
        }
        parts.push(describe("(b)", &l.b));
        if let Some(c) = &l.c {
            parts.push(describe("(c)", c));
        }
        parts.push(describe("(d)", &l.d));
        witness.push(format!("{label}: {}", parts.join(" ")));
    }
    if let Some(rep) = alpha_source {
        let a = stated_centralizers(g, &rep)?.a.ok_or(Error::GenusOutOfRange(g))?;
        pass &= a.holds();
        witness.push(format!("phi1_alpha: {}", describe("(a)", &a)));
    }
    Ok(Outcome::new(pass, witness.join("; ")))
}

fn restriction(g: usize) -> Result<Outcome> {
    let (pm, pp) = m_indices(g - 1);
    let mut pass = true;
    let mut witness = Vec::new();
    for (sign, three, one) in [(Sign::Minus, pm, pp), (Sign::Plus, pp, pm)] {
        let mut found: Vec<u128> = restriction_orbits(&build_phi(g, sign)?, g)?.iter().map(|&s| s as u128).collect();
        let mut expected = vec![three, three, three, one];
        found.sort();
        expected.sort();
        pass &= found == expected;
        witness.push(format!("phi_{sign}: {found:?}"));
    }
    Ok(Outcome::new(pass, witness.join("; ")))
}

fn epsilon_onto(h: usize) -> Result<Outcome> {
    let g = (h - 1) / 2;
    let mats: Vec<BitMatrix> = epsilon(h)?.images().cloned().collect();
    let order = vector_group(&mats)?.order();
    Ok(Outcome::new(order == sp_order(g), format!("order {order}, |Sp({},2)| = {}", 2 * g, sp_order(g))))
}

fn twist_image_order(h: usize) -> Result<Outcome> {
    let g = (h - 1) / 2;
    let full = homology_rep(h)?;
    let system = GeneratorSystem::new(h, Flavor::M)?;
    let twists = system.twist_names().iter().map(|n| full.require(n).cloned()).collect::<Result<Vec<_>>>()?;
    let order = vector_group(&twists)?.order();
    let expected = if h.is_multiple_of(2) { sp_order(g) << (2 * g + 1) } else { sp_order(g) };
    Ok(Outcome::new(order == expected, format!("order {order}, expected {expected}")))
}

fn extension_bases(inputs: &Inputs, g: usize) -> Result<Vec<(String, PermRep)>> {
    let mut bases: Vec<(String, PermRep)> =
        [Sign::Minus, Sign::Plus].iter().map(|&s| Ok((format!("phi_{s}"), build_phi(g, s)?))).collect::<Result<_>>()?;
    if g == 2 {
        bases.push(("phi1_alpha".into(), inputs.table(TableName::Phi1Alpha).with_alias()));
    }
    Ok(bases)
}

fn extensions(inputs: &Inputs, g: usize) -> Result<Outcome> {
    let mut pass = true;
    let mut witness = Vec::new();
    for (label, base) in extension_bases(inputs, g)? {
        let w = |i: usize| base.require(&twist_name(i)).cloned();
        let id = Permutation::identity(base.degree());
        for r in 1..=2 {
            for flavor in [Flavor::M, Flavor::T] {
                let ext = match extension_solve(g, r, flavor, &base) {
                    Ok(ext) => ext,
                    Err(e) => {
                        pass = false;
                        witness.push(format!("{label} r={r} {flavor:?}: {e}"));
                        continue;
                    }
                };
                let mut expected: Vec<(String, Permutation)> = Vec::new();
                match flavor {
                    Flavor::M => expected.push((U.into(), if r == 1 { w(2 * g)? } else { w(2 * g + 2)? })),
                    Flavor::T => {
                        expected.push((U_SQUARED.into(), id.clone()));
                        if ext.h == 5 {
                            expected.push(("UT0U^-1".into(), w(4)?.conjugate(&w(0)?)));
                        }
                    }
                }
                if r == 2 {
                    expected.push((twist_name(2 * g + 1), w(2 * g + 2)?));
                }
                let mut values = Vec::new();
                for (name, value) in &expected {
                    let found = ext.rep.require(name)?;
                    pass &= found == value;
                    values.push(format!("{name} = {found}"));
                }
                witness.push(format!("{label} r={r} {flavor:?}: {} of {} candidates", values.join(", "), ext.candidates));
            }
        }
    }
    Ok(Outcome::new(pass, witness.join("; ")))
}

fn extension_consistency(g: usize) -> Result<Outcome> {
    let model = build_sp(g)?;
    let mut pass = true;
    let mut witness = Vec::new();
    for sign in [Sign::Minus, Sign::Plus] {
        let base = build_phi(g, sign)?;
        for r in 1..=2 {
            let h = 2 * g + r;
            let ext = extension_solve(g, r, Flavor::M, &base)?;
            let names = GeneratorSystem::new(h, Flavor::M)?.generator_names();
            let names: Vec<&str> = names.iter().map(String::as_str).collect();
            let (_, action) = form_action(&epsilon(h)?.restrict(&names)?, &model.canonical_form(sign.arf()))?;
            let found = conjugating_element(&action, &ext.rep.restrict(&names)?)?;
            pass &= found.is_some();
            witness.push(format!(
                "phi_{sign} h={h}: {}",
                if found.is_some() { "conjugate" } else { "not conjugate" }
            ));
        }
    }
    Ok(Outcome::new(pass, witness.join("; ")))
}

fn closure(g: usize) -> Result<Outcome> {
    let h = 2 * g + 1;
    let eps = epsilon(h)?;
    let mats: Vec<BitMatrix> = eps.images().cloned().collect();
    let group = vector_group(&mats)?;
    let w = |i: usize| eps.require(&twist_name(i)).map(|m| m.nonzero_vector_action());
    let closure = normal_closure(&group, &[commutator(&w(1)?, &w(2)?)])?;
    let derived = commutator_subgroup(&group);
    let index = group.order() / closure.order();
    let expected_index = if g == 2 { 2 } else { 1 };
    Ok(Outcome::new(
        closure.order() == derived.order() && index == expected_index,
        format!("closure order {}, derived order {}, index {index}", closure.order(), derived.order()),
    ))
}

fn odd_minus() -> Result<Outcome> {
    let mut pass = true;
    let mut failures = Vec::new();
    for (m, tau) in replay::tau_cases() {
        for r in replay::odd_minus(m, &tau)? {
            if !r.holds() {
                pass = false;
                failures.push(format!("{} m={m} tau={tau}: {}", r.unknown, r.solutions.len()));
            }
        }
    }
    Ok(Outcome::new(
        pass,
        if pass { "UT3U^-1 = (3 5)tau, UT0U^-1 = (4 6)tau, unique in all 9 cases".into() } else { failures.join("; ") },
    ))
}

fn even_minus() -> Result<Outcome> {
    let mut failures = Vec::new();
    for (m, tau) in replay::tau_cases() {
        let r = replay::even_minus(m, &tau)?;
        if !r.holds() {
            failures.push(format!("m={m} tau={tau}: {} solutions", r.solutions.len()));
        }
    }
    let pass = failures.is_empty();
    Ok(Outcome::new(pass, if pass { "T5 = (5 6)tau, unique in all 9 cases".into() } else { failures.join("; ") }))
}

fn odd_alpha() -> Result<Outcome> {
    let mut pass = true;
    let mut counts = Vec::new();
    for (m, tau) in replay::tau_cases() {
        let replays = replay::odd_alpha(m, &tau)?;
        pass &= replays.iter().all(|r| r.holds());
        if m == 10 {
            let c: Vec<String> = replays.iter().map(|r| format!("{} {}", r.unknown, r.solutions.len())).collect();
            counts.push(format!("m=10 tau={tau}: {}", c.join(", ")));
        }
    }
    Ok(Outcome::new(pass, counts.join("; ")))
}

fn arithmetic_guard() -> Result<Outcome> {
    let mut pass = true;
    let mut witness = Vec::new();
    for g in 4..=8 {
        let lhs = 5 * m_indices(g - 1).0;
        let rhs = m_indices(g).1;
        pass &= lhs > rhs;
        witness.push(format!("g={g}: {lhs} > {rhs}"));
    }
    Ok(Outcome::new(pass, witness.join(", ")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_sorted() {
        let ids: Vec<String> = registry().into_iter().map(|c| c.id).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(ids, sorted);
        assert!(find("indices_g3").is_some());
        assert!(find("no_such_claim").is_none());
    }

    #[test]
    fn indices_g3_witness() {
        let report = find("indices_g3").unwrap().run(&Inputs::builtin(), false);
        assert_eq!(report.status, Status::Pass);
        assert_eq!(report.witness, "(28, 36)");
    }

    #[test]
    fn corrupted_table_fails() {
        let inputs = Inputs::corrupted(TableName::Phi2Minus);
        assert_eq!(find("tables_phi2_minus").unwrap().run(&inputs, false).status, Status::Fail);
        assert_eq!(find("tables_phi2_plus").unwrap().run(&inputs, false).status, Status::Pass);
    }

    #[test]
    fn skipped_above_ceiling() {
        let reports = run_all(1, &Inputs::builtin(), false);
        assert!(reports.iter().filter(|r| r.claim != "arithmetic_guard").all(|r| r.status == Status::Skipped));
        assert_eq!(reports.iter().find(|r| r.claim == "arithmetic_guard").unwrap().status, Status::Pass);
    }
}
