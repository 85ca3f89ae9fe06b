use sl12_core::algebra::{check_dominant, is_typical, Borel, Weight};
use sl12_core::characters::{char_of, cv_char_formula, demazure_char_formula, truncated_char_formula, weyl_char_formula};
use sl12_core::combinatorics::{cv_basis_index_set, dec_i_holds, descents, dim_identity, enumerate_i, j_set, Partition};
use sl12_core::exactla::Q;
use sl12_core::fusion::{fuse, FusionSpec, GradedRealization};
use sl12_core::presentations::{
    check_basis_independence, check_cv_relations, check_demazure, check_demazure_lowest_weight, check_truncated,
    check_weyl_relations, cv_basis_elements, weyl_pool_elements, CvDatum,
};
use sl12_core::repcore::{g0_decompose, g0_total_dim, is_irreducible, kac_b2, kac_induced};
use sl12_core::suites::{expected_g0, run_criterion, suite_criteria, Sizes};
use sl12_core::{Error, Result};

use crate::report::{Report, Row};

fn weight(lambda1: &Q, lambda2: u32) -> Weight {
    Weight::new(lambda1.clone(), lambda2 as i64)
}

fn show_weights(ws: &[Weight]) -> Vec<String> {
    ws.iter().map(|w| w.to_string()).collect()
}

/// Records the data every fusion-built module shares.
fn fusion_data(report: &mut Report, g: &GradedRealization) {
    let ch = g.character();
    report.data("dim", g.dim());
    report.data("graded_dims", g.graded_dims());
    report.data("character", ch.to_string());
    report.data("character_mass", ch.mass());
    report.data("graded_character", g.graded_character().to_json());
}

pub fn kac(lambda1: &Q, lambda2: u32, borel: Borel) -> Result<Report> {
    let lambda = weight(lambda1, lambda2);
    let mut report = Report::new("kac");
    report.param("lambda1", lambda1);
    report.param("lambda2", lambda2);
    report.param("borel", format!("{borel:?}").to_lowercase());
    let m = match borel {
        Borel::B2 => kac_b2(&lambda)?,
        _ => kac_induced(borel, &lambda)?,
    };
    let case = format!("K{lambda}");
    let g0 = g0_decompose(&m.module);
    let expected = expected_g0(borel, &lambda);
    report.data("dim", m.dim());
    report.data("character", char_of(&m.module).to_string());
    report.data("g0_decomposition", show_weights(&g0));
    report.checks.push(Row::compare("kac", &case, "dim = Σ dim of g0-summands", g0_total_dim(&expected), m.dim()));
    report.checks.push(Row::compare("kac", &case, "g0-decomposition", show_weights(&expected).join(" "), show_weights(&g0).join(" ")));
    if let Err(e) = m.module.check_representation(2) {
        report.checks.push(Row::compare("kac", &case, "representation", "ok", e));
    }
    if borel == Borel::B2 {
        if lambda2 > 0 {
            report.checks.push(Row::compare("kac", &case, "dim = 4λ2", 4 * lambda2 as usize, m.dim()));
        }
        let irreducible = is_irreducible(&m)?;
        report.data("irreducible", irreducible);
        if !lambda.is_zero() {
            let typical = is_typical(&lambda)?;
            report.data("typical", typical);
            report.checks.push(Row::compare("kac", &case, "irreducible ⇔ typical", typical, irreducible));
        }
    }
    Ok(report)
}

pub fn weyl(lambda1: &Q, lambda2: u32) -> Result<Report> {
    let lambda = weight(lambda1, lambda2);
    let mut report = Report::new("weyl");
    report.param("lambda1", lambda1);
    report.param("lambda2", lambda2);
    let g = fuse(&FusionSpec::weyl(&lambda)?)?;
    fusion_data(&mut report, &g);
    let case = format!("W{lambda}");
    report.checks.push(Row::compare("weyl", &case, "dim = 4^λ2", 4usize.pow(lambda2), g.dim()));
    report.checks.extend(Row::from_relations(&check_weyl_relations(&g, &lambda)?));
    let (rank, _) = check_basis_independence(g.base(), &weyl_pool_elements(lambda2));
    report.checks.push(Row::compare("weyl", &case, "rank of the spanning monomials", g.dim(), rank));
    report.checks.push(Row::compare("weyl", &case, "character formula", weyl_char_formula(lambda1, lambda2), g.character()));
    Ok(report)
}

pub fn cv(lambda1: &Q, xi: &Partition, z: Option<&[Q]>, kappa: Option<&[Q]>) -> Result<Report> {
    let mut report = Report::new("cv");
    report.param("lambda1", lambda1);
    report.param("xi", xi);
    if let Some(z) = z {
        report.param("z", join(z));
    }
    if let Some(k) = kappa {
        report.param("kappa", join(k));
    }
    let g = fuse(&FusionSpec::for_partition(lambda1, xi, z, kappa)?)?;
    fusion_data(&mut report, &g);
    let datum = CvDatum::new(lambda1.clone(), xi.clone());
    let case = datum.to_string();
    let expected = 4u128.pow(xi.len() as u32) * xi.product();
    report.checks.push(Row::compare("cv", &case, "dim = 4^|ξ| Π ξ_i", expected, g.dim() as u128));
    report.checks.extend(Row::from_relations(&check_cv_relations(&g, &datum)?));
    let basis = cv_basis_index_set(xi);
    let (rank, _) = check_basis_independence(g.base(), &cv_basis_elements(&basis));
    report.checks.push(Row::compare("cv", &case, "basis size", expected, basis.len() as u128));
    report.checks.push(Row::compare("cv", &case, "basis rank", g.dim(), rank));
    report.checks.push(Row::compare("cv", &case, "character formula", cv_char_formula(lambda1, xi)?, g.character()));
    Ok(report)
}

pub fn demazure(ell: u32, lambda1: &Q, lambda2: u32) -> Result<Report> {
    let lambda = weight(lambda1, lambda2);
    check_dominant(&lambda)?;
    let mut report = Report::new("demazure");
    report.param("ell", ell);
    report.param("lambda1", lambda1);
    report.param("lambda2", lambda2);
    let g = fuse(&FusionSpec::demazure(ell, &lambda)?)?;
    fusion_data(&mut report, &g);
    let case = format!("D({ell}, {lambda})");
    if lambda2 > 0 {
        let q = lambda2.div_ceil(ell);
        let m = lambda2 - (q - 1) * ell;
        let expected = 4u128.pow(q) * (ell as u128).pow(q - 1) * m as u128;
        report.checks.push(Row::compare("demazure", &case, "dim = 4^q ℓ^(q-1) m", expected, g.dim() as u128));
    }
    report.checks.push(Row::compare("demazure", &case, "character formula", demazure_char_formula(ell, &lambda)?, g.character()));
    report.checks.extend(Row::from_relations(&check_demazure(&g, ell, &lambda)?));
    report.checks.extend(Row::from_relations(&check_demazure_lowest_weight(&g, ell, &lambda)?));
    Ok(report)
}

pub fn truncated(n: u32, lambda1: &Q, lambda2: u32) -> Result<Report> {
    let lambda = weight(lambda1, lambda2);
    let mut report = Report::new("truncated");
    report.param("n", n);
    report.param("lambda1", lambda1);
    report.param("lambda2", lambda2);
    let g = fuse(&FusionSpec::truncated(n, &lambda)?)?;
    fusion_data(&mut report, &g);
    let case = format!("W({lambda}, N={n})");
    if n < lambda2 {
        let (q, m) = (lambda2 / n, lambda2 % n);
        let expected = 4u128.pow(n) * (q as u128).pow(n - m) * (q as u128 + 1).pow(m);
        report.checks.push(Row::compare("truncated", &case, "dim = 4^N q^(N-m) (q+1)^m", expected, g.dim() as u128));
        report.checks.push(Row::compare("truncated", &case, "character formula", truncated_char_formula(n, &lambda)?, g.character()));
    } else {
        report.checks.push(Row::compare("truncated", &case, "dim = 4^λ2 (N ≥ λ2)", 4usize.pow(lambda2), g.dim()));
        report.checks.push(Row::compare("truncated", &case, "character formula", weyl_char_formula(lambda1, lambda2), g.character()));
    }
    report.checks.extend(Row::from_relations(&check_truncated(&g, n, &lambda)?));
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Check {
    /// `Σ_{I(ξ)} 4^|b(c(ξ))| Π b(c(ξ)) = 4^|ξ| Π ξ_i`.
    DimIdentity,
    /// The splitting of I(ξ) at each descent t.
    Decomposition,
    All,
}

pub enum Selection {
    One(Partition),
    Size(u32),
    UpTo(u32),
}

pub fn combinatorics(selection: &Selection, check: Check) -> Result<Report> {
    let mut report = Report::new("combinatorics");
    report.param("check", format!("{check:?}"));
    let partitions = match selection {
        Selection::One(xi) => {
            report.param("xi", xi);
            let entries: Vec<String> = enumerate_i(xi).iter().map(|e| format!("{} ↦ {}", e.pair, e.result)).collect();
            report.data("I", entries);
            let j: Vec<String> = j_set(xi).iter().map(|c| format!("{c:?}")).collect();
            report.data("J", j);
            report.data("descents", descents(xi));
            report.data("cv_basis_size", cv_basis_index_set(xi).len());
            vec![xi.clone()]
        }
        Selection::Size(n) => {
            report.param("n", n);
            Partition::all(*n)
        }
        Selection::UpTo(m) => {
            report.param("max_n", m);
            (1..=*m).flat_map(Partition::all).collect()
        }
    };
    report.data("partitions", partitions.len());
    for p in &partitions {
        let case = p.to_string();
        if check != Check::Decomposition {
            let (lhs, rhs) = dim_identity(p);
            report.checks.push(Row::compare("combinatorics", &case, "Σ over I(ξ) = 4^|ξ| Π ξ_i", rhs, lhs));
        }
        if check != Check::DimIdentity {
            for t in descents(p) {
                report.checks.push(Row::compare("combinatorics", &case, &format!("I(ξ) decomposition at t={t}"), true, dec_i_holds(p, t)?));
            }
        }
    }
    Ok(report)
}

pub fn verify(suites: &[String], sizes: &Sizes) -> Result<Report> {
    let mut ids: Vec<u32> = Vec::new();
    for s in suites {
        let found = suite_criteria(s).ok_or_else(|| Error::InvalidParameter(format!("unknown suite {s:?}")))?;
        ids.extend(found);
    }
    ids.sort_unstable();
    ids.dedup();
    let mut report = Report::new("verify");
    report.param("suite", suites.join(","));
    report.data("sizes", sizes);
    let mut criteria = Vec::new();
    for id in ids {
        let c = run_criterion(id, sizes).expect("suite ids are valid criteria");
        criteria.push(serde_json::json!({
            "id": c.id,
            "title": c.title,
            "pass": c.passed(),
            "cases": format!("{}/{}", c.pass_count(), c.cases.len()),
        }));
        let suite = format!("criterion {}", c.id);
        for r in &c.cases {
            report.checks.push(Row {
                suite: suite.clone(),
                case: r.case.clone(),
                params: c.title.to_string(),
                expected: "pass".into(),
                computed: r.detail.clone(),
                pass: r.pass,
            });
        }
    }
    report.data("criteria", criteria);
    Ok(report)
}

fn join(v: &[Q]) -> String {
    v.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(",")
}
