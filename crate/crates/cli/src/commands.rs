//! The four inspection subcommands: `chars`, `gim`, `gelfand`, `aut`. Each
//! prints a short human summary and optionally writes a JSON document.

use std::path::Path;

use anyhow::{Context, Result};
use num::integer::gcd;
use num::ToPrimitive;
use reflekt_core::aut::{aut_order_formula, enumerate_aut, gim_exists};
use reflekt_core::chars::{
    chi_theta_class_function, chi_theta_degree, irr_degree_list, orbit_and_stabilizer,
};
use reflekt_core::cyclo::WireCyclo;
use reflekt_core::group::ExternalElement;
use reflekt_core::grp2::gim_grp2;
use reflekt_core::model::{
    build_model_rep, extract_gim, gelfand_check, rep_character, verify_gim,
};
use reflekt_core::partition::multipartitions;
use reflekt_core::twisted::counting_char;
use reflekt_core::{
    Budget, ClassFunction, Error, GroupData, GroupKey, GroupMap, ModelCandidate, ModelVariant,
};
use serde::Serialize;

use crate::cache::Cache;
use crate::grid::key_label;

fn write_json<T: Serialize>(path: &Path, doc: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(doc)?;
    text.push('\n');
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn wire_values(f: &ClassFunction) -> Vec<WireCyclo> {
    f.values().iter().map(|v| v.to_wire()).collect()
}

#[derive(Serialize)]
struct CharsDoc {
    key: String,
    irr: Vec<IrrEntry>,
}

#[derive(Serialize)]
struct IrrEntry {
    theta: Vec<Vec<u32>>,
    degree: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    values: Option<std::collections::BTreeMap<String, WireCyclo>>,
}

/// Degree list (and, for p = 1, the exact character table) of the key.
/// Value tables for proper subgroups are not emitted: restrictions with a
/// nontrivial stabilizer split, and the split constituents have no canonical
/// value table here.
pub fn chars_cmd(
    key: GroupKey,
    values: bool,
    cache: &Cache,
    budget: &Budget,
    json: Option<&Path>,
) -> Result<i32> {
    if values && key.p != 1 {
        eprintln!("usage error: --values needs p = 1; degree lists cover p > 1");
        return Ok(2);
    }
    let group = if values { Some(cache.group(key, budget)?) } else { None };
    let mut irr = Vec::new();
    for theta in multipartitions(key.r, key.n as u32) {
        let (orbit, k) = orbit_and_stabilizer(&theta, key);
        if orbit.iter().min() != Some(&theta) {
            continue;
        }
        let degree = chi_theta_degree(&theta) / k as u128;
        let components: Vec<Vec<u32>> =
            theta.components().iter().map(|p| p.parts().to_vec()).collect();
        let table = match &group {
            Some(g) => {
                let f = chi_theta_class_function(g, &theta)?;
                Some(
                    f.values()
                        .iter()
                        .enumerate()
                        .map(|(c, v)| (c.to_string(), v.to_wire()))
                        .collect(),
                )
            }
            None => None,
        };
        for _ in 0..k {
            irr.push(IrrEntry {
                theta: components.clone(),
                degree: degree as u64,
                values: table.clone(),
            });
        }
    }
    let label = key_label(key);
    let degrees = irr_degree_list(key)?;
    let squares: u128 = degrees.iter().map(|d| d * d).sum();
    println!("{label}: {} irreducible characters", degrees.len());
    println!("degrees: {}", join_u128(&degrees));
    println!("sum of squared degrees: {squares} = |G|");
    if let Some(path) = json {
        write_json(path, &CharsDoc { key: label, irr })?;
        println!("wrote {}", path.display());
    }
    Ok(0)
}

fn join_u128(xs: &[u128]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
struct GimDoc {
    key: String,
    tau: &'static str,
    classes: Vec<GimClass>,
    verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<&'static str>,
}

#[derive(Serialize)]
struct GimClass {
    rep: ExternalElement,
    centralizer_order: usize,
    lambda: std::collections::BTreeMap<String, i64>,
}

/// Builds a generalized involution model for the key when one exists and
/// emits its characters; reports the obstruction tag otherwise.
pub fn gim_cmd(key: GroupKey, cache: &Cache, budget: &Budget, json: Option<&Path>) -> Result<i32> {
    let label = key_label(key);
    let (exists, reason) = gim_exists(key);
    if !exists {
        println!("{label}: no generalized involution model ({})", reason.as_str());
        if let Some(path) = json {
            let doc = GimDoc {
                key: label,
                tau: "inverse-transpose",
                classes: Vec::new(),
                verified: false,
                reason: Some(reason.as_str()),
            };
            write_json(path, &doc)?;
            println!("wrote {}", path.display());
        }
        return Ok(0);
    }
    let group = cache.group(key, budget)?;
    let candidate = build_candidate(key, &group)?;
    let tau = GroupMap::inverse_transpose(&group);
    let verified = verify_gim(&group, &candidate, &tau)?;
    let mut classes = Vec::with_capacity(candidate.entries().len());
    for (omega, lambda) in candidate.entries() {
        let mut map = std::collections::BTreeMap::new();
        for (g, value) in lambda.domain().iter().zip(lambda.values()) {
            let sign = value
                .as_integer()?
                .to_i64()
                .ok_or_else(|| Error::Consistency("character value out of range".into()))?;
            map.insert(g.to_string(), sign);
        }
        classes.push(GimClass {
            rep: ExternalElement::from(group.elem(*omega)),
            centralizer_order: lambda.domain().len(),
            lambda: map,
        });
    }
    println!(
        "{label}: model with {} linear characters on twisted centralizers, verified = {verified}",
        classes.len()
    );
    for entry in &classes {
        println!(
            "  rep phases {:?} perm {:?}: centralizer order {}",
            entry.rep.phases, entry.rep.perm, entry.centralizer_order
        );
    }
    if let Some(path) = json {
        let doc =
            GimDoc { key: label, tau: "inverse-transpose", classes, verified, reason: None };
        write_json(path, &doc)?;
        println!("wrote {}", path.display());
    }
    Ok(if verified { 0 } else { 1 })
}

/// The model the classification guarantees: closed-form for the rank-two
/// family, otherwise extracted from the Gelfand model variant that applies.
fn build_candidate(key: GroupKey, group: &GroupData) -> Result<ModelCandidate, Error> {
    let rank_two = key.n == 2 && key.r % 2 == 0 && key.p % 2 == 0 && (key.r / key.p) % 2 == 1;
    if rank_two {
        return gim_grp2(group);
    }
    let variant = if key.p == 1 {
        ModelVariant::Plain
    } else if key.p % 2 == 1 || (key.r / key.p) % 2 == 1 {
        ModelVariant::Restricted
    } else {
        ModelVariant::Twisted
    };
    let rep = build_model_rep(group, variant)?;
    extract_gim(group, &rep)
}

#[derive(Serialize)]
struct GelfandDoc {
    key: String,
    variants: GelfandVerdicts,
    #[serde(skip_serializing_if = "Option::is_none")]
    compared: Option<ComparedChars>,
}

#[derive(Serialize)]
struct GelfandVerdicts {
    plain: Option<bool>,
    restricted: Option<bool>,
    twisted: Option<bool>,
}

#[derive(Serialize)]
struct ComparedChars {
    variant: &'static str,
    model: Vec<WireCyclo>,
    counting: Vec<WireCyclo>,
}

fn variant_name(v: ModelVariant) -> &'static str {
    match v {
        ModelVariant::Plain => "plain",
        ModelVariant::Restricted => "restricted",
        ModelVariant::Twisted => "twisted",
    }
}

/// Evaluates each applicable model variant against the counting character
/// and emits the two compared class functions for one chosen variant.
pub fn gelfand_cmd(
    key: GroupKey,
    variant_flag: Option<&str>,
    cache: &Cache,
    budget: &Budget,
    json: Option<&Path>,
) -> Result<i32> {
    let label = key_label(key);
    let group = cache.group(key, budget)?;
    let d = gcd(key.p, key.n as u32);
    let twisted_applies = key.p % 2 == 0 && (key.r / key.p) % 2 == 0 && d == 1;

    let plain = if key.p == 1 {
        Some(gelfand_check(&group, ModelVariant::Plain)?)
    } else {
        None
    };
    let restricted = if key.p > 1 && d <= 2 {
        Some(gelfand_check(&group, ModelVariant::Restricted)?)
    } else {
        None
    };
    let twisted = if twisted_applies {
        Some(gelfand_check(&group, ModelVariant::Twisted)?)
    } else {
        None
    };

    let chosen = match variant_flag {
        Some("plain") => Some(ModelVariant::Plain),
        Some("restricted") => Some(ModelVariant::Restricted),
        Some("twisted") => Some(ModelVariant::Twisted),
        Some(other) => {
            eprintln!("usage error: unknown variant '{other}' (plain, restricted, twisted)");
            return Ok(2);
        }
        // Default to the variant the parity laws predict to succeed, if any.
        None => {
            if key.p == 1 {
                Some(ModelVariant::Plain)
            } else if d == 1 && (key.p % 2 == 1 || (key.r / key.p) % 2 == 1) {
                Some(ModelVariant::Restricted)
            } else if twisted_applies {
                Some(ModelVariant::Twisted)
            } else if d <= 2 {
                Some(ModelVariant::Restricted)
            } else {
                None
            }
        }
    };
    let applicable = |v: ModelVariant| match v {
        ModelVariant::Plain => key.p == 1,
        ModelVariant::Restricted => key.p > 1 && d <= 2,
        ModelVariant::Twisted => twisted_applies,
    };
    if let Some(v) = chosen {
        if !applicable(v) {
            eprintln!("usage error: variant '{}' does not apply to {label}", variant_name(v));
            return Ok(2);
        }
    }

    let compared = match chosen {
        Some(v) => {
            let rep = build_model_rep(&group, v)?;
            let model = rep_character(&group, &rep)?;
            let tau = GroupMap::inverse_transpose(&group);
            let counting = counting_char(&group, &tau)?;
            Some(ComparedChars {
                variant: variant_name(v),
                model: wire_values(&model),
                counting: wire_values(&counting),
            })
        }
        None => None,
    };

    let show = |name: &str, v: Option<bool>| match v {
        Some(b) => println!("{name}: {b}"),
        None => println!("{name}: not applicable"),
    };
    println!("{label}: Gelfand model verdicts");
    show("  plain", plain);
    show("  restricted", restricted);
    show("  twisted", twisted);
    if let Some(c) = &compared {
        println!("compared class functions for the {} variant over {} classes", c.variant, c.model.len());
    }
    if let Some(path) = json {
        let doc = GelfandDoc {
            key: label,
            variants: GelfandVerdicts { plain, restricted, twisted },
            compared,
        };
        write_json(path, &doc)?;
        println!("wrote {}", path.display());
    }
    Ok(0)
}

#[derive(Serialize)]
struct AutDoc {
    key: String,
    aut_order: u64,
    out_order: u64,
    center_order: u64,
    formula: FormulaConstants,
    enumerated: Option<u64>,
    #[serde(rename = "match")]
    matches: Option<bool>,
}

#[derive(Serialize)]
struct FormulaConstants {
    c: [u64; 2],
    c_prime: u64,
    e: u32,
}

/// The automorphism counts from the closed formula, cross-checked by
/// exhaustive enumeration when the group is small enough for the budget.
pub fn aut_cmd(key: GroupKey, cache: &Cache, budget: &Budget, json: Option<&Path>) -> Result<i32> {
    let label = key_label(key);
    let orders = aut_order_formula(key)?;
    let (enumerated, matches) = match cache.group(key, budget) {
        Ok(group) => match enumerate_aut(&group, budget) {
            Ok(auts) => {
                let n = auts.len() as u64;
                (Some(n), Some(n as u128 == orders.aut))
            }
            Err(Error::SizeExceeded { .. }) => (None, None),
            Err(e) => return Err(e.into()),
        },
        Err(Error::SizeExceeded { .. }) => (None, None),
        Err(e) => return Err(e.into()),
    };
    println!("{label}: |Aut| = {}, |Out| = {}, |Z| = {}", orders.aut, orders.out, orders.center);
    println!(
        "formula constants: c = {}/{}, c' = {}, e = {}",
        orders.c.0, orders.c.1, orders.c_prime, orders.e
    );
    match (enumerated, matches) {
        (Some(n), Some(ok)) => println!("enumerated {n} automorphisms, match = {ok}"),
        _ => println!("enumeration skipped (budget)"),
    }
    if let Some(path) = json {
        let doc = AutDoc {
            key: label,
            aut_order: orders.aut as u64,
            out_order: orders.out as u64,
            center_order: orders.center as u64,
            formula: FormulaConstants {
                c: [orders.c.0, orders.c.1],
                c_prime: orders.c_prime,
                e: orders.e,
            },
            enumerated,
            matches,
        };
        write_json(path, &doc)?;
        println!("wrote {}", path.display());
    }
    Ok(if matches == Some(false) { 1 } else { 0 })
}
