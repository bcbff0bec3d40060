use std::process::ExitCode;

use anyhow::Result;
use serde_json::json;

use dowker::duality::DualityMismatch;
use dowker::format::{self, ComplexDoc};
use dowker::{dot, BettiVector, ComplexCosheaf, Error, RedundancyMorphism, Relation, SetCosheaf};

pub fn set_cosheaf_table(c: &SetCosheaf) -> String {
    let base = c.base();
    let mut out = String::new();
    for i in 0..base.len() {
        let costalk: Vec<&str> = c.costalk(i).iter().map(|&y| c.fiber().label(y)).collect();
        out.push_str(&format!(
            "{}: {}\n",
            base.element(i).display(base.universe()),
            costalk.join(",")
        ));
    }
    out
}

fn complex_summary(k: &dowker::SimplicialComplex) -> String {
    if k.is_empty() {
        return "∅".into();
    }
    let parts: Vec<String> = k
        .maximal()
        .iter()
        .map(|s| format!("[{}]", s.key(k.universe())))
        .collect();
    parts.join(" ")
}

pub fn print_complex_cosheaf(c: &ComplexCosheaf, json: bool, as_dot: bool) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&format::complex_cosheaf_to_json(c)).unwrap()
        );
    } else if as_dot {
        print!("{}", dot::complex_cosheaf_dot(c));
    } else {
        let base = c.base();
        for i in 0..base.len() {
            println!(
                "{}: {}",
                base.element(i).display(base.universe()),
                complex_summary(c.costalk(i))
            );
        }
    }
}

pub fn betti_line(b: &BettiVector) -> String {
    b.0.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn check_duality(r: &Relation, json: bool, homology: bool, as_dot: bool) -> ExitCode {
    let cert = dowker::check_dowker_duality(r);
    let betti = homology.then(|| {
        (
            dowker::betti(&dowker::dowker(r)),
            dowker::betti(&dowker::dowker(&r.transpose())),
        )
    });
    let homology_ok = betti.as_ref().is_none_or(|(a, b)| a.same_homology(b));
    if json {
        let mismatch = cert.mismatch.as_ref().map(|m| match m {
            DualityMismatch::Base { dual, transposed } => {
                json!({ "base": { "dual": dual, "transposed": transposed } })
            }
            DualityMismatch::Costalk {
                simplex,
                dual,
                transposed,
            } => {
                json!({ "costalk": { "simplex": simplex, "dual": dual, "transposed": transposed } })
            }
        });
        let mut doc = json!({
            "passed": cert.passed(),
            "matched": cert.matched.iter().map(|(s, k)| json!({ "simplex": s, "costalk": k })).collect::<Vec<_>>(),
            "mismatch": mismatch,
        });
        if let Some((a, b)) = &betti {
            doc["homology"] =
                json!({ "relation": a.0, "transpose": b.0, "passed": a.same_homology(b) });
        }
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        println!("{}", if cert.passed() { "PASS" } else { "FAIL" });
        for (s, k) in &cert.matched {
            let k: Vec<String> = k.iter().map(|m| format!("[{m}]")).collect();
            println!("  [{s}] {} ok", k.join(" "));
        }
        match &cert.mismatch {
            Some(DualityMismatch::Base { dual, transposed }) => {
                println!(
                    "  base differs: dual has {} simplices, transpose has {}",
                    dual.len(),
                    transposed.len()
                );
            }
            Some(DualityMismatch::Costalk {
                simplex,
                dual,
                transposed,
            }) => {
                println!("  [{simplex}] dual {dual:?} != transpose {transposed:?}");
            }
            None => {}
        }
        if let Some((a, b)) = &betti {
            println!(
                "homology {}",
                if a.same_homology(b) { "PASS" } else { "FAIL" }
            );
            println!("  relation  {}", betti_line(a));
            println!("  transpose {}", betti_line(b));
        }
        if as_dot {
            print!(
                "{}",
                dot::complex_cosheaf_dot(&dowker::dual(&dowker::coshv_rep(r)))
            );
            print!(
                "{}",
                dot::complex_cosheaf_dot(&dowker::coshv_rep(&r.transpose()))
            );
        }
    }
    if cert.passed() && homology_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

pub fn redundancy(r: &Relation, json: bool, as_dot: bool) {
    let report = dowker::redundant_rows(r);
    let s = dowker::redundancy_cosheaf(r);
    if json {
        let cosections = dowker::global_cosection_complex(&s);
        let doc = json!({
            "redundant_rows": report.redundant_rows,
            "duplicates": report.duplicates,
            "cosections": ComplexDoc::from(&cosections),
            "cosheaf": format::complex_cosheaf_to_json(&s),
        });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        return;
    }
    if report.is_empty() {
        println!("no redundant rows");
    }
    for w in &report.redundant_rows {
        println!("{} is contained in {}", w.row, w.witness);
    }
    for group in &report.duplicates {
        eprintln!("note: identical rows {}", group.join(", "));
    }
    if as_dot {
        print!("{}", dot::complex_cosheaf_dot(&s));
    }
}

pub fn morphism_check(
    src: &Relation,
    tgt: &Relation,
    text: &str,
    json: bool,
    redundancy: bool,
) -> Result<ExitCode> {
    let m = match format::parse_morphism(text, src, tgt) {
        Ok(m) => m,
        Err(Error::MorphismViolation(ws)) => {
            if json {
                let pairs: Vec<_> = ws
                    .iter()
                    .map(|w| json!({ "x": w.x, "y": w.y, "fx": w.fx, "gy": w.gy }))
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({ "valid": false, "violations": pairs }))?
                );
            } else {
                println!("invalid: {} related pair(s) not preserved", ws.len());
                for w in &ws {
                    println!("  ({},{}) -> ({},{})", w.x, w.y, w.fx, w.gy);
                }
            }
            return Ok(ExitCode::from(1));
        }
        Err(e) => return Err(e.into()),
    };
    let outcome = redundancy.then(|| dowker::try_induced_redundancy_morphism(&m));
    if json {
        let mut doc = json!({ "valid": true, "morphism": format::morphism_to_json(&m) });
        match &outcome {
            Some(RedundancyMorphism::Morphism(_)) => doc["redundancy"] = json!({ "induced": true }),
            Some(RedundancyMorphism::Obstruction(o)) => {
                doc["redundancy"] = json!({
                    "induced": false,
                    "simplex": o.simplex,
                    "image": o.image,
                    "face": o.face,
                })
            }
            None => {}
        }
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        println!("valid");
        match &outcome {
            Some(RedundancyMorphism::Morphism(rm)) => {
                println!("redundancy cosheaf morphism induced");
                print!("{}", dot::complex_morphism_dot(rm));
            }
            Some(RedundancyMorphism::Obstruction(o)) => println!("obstruction: {o}"),
            None => {}
        }
    }
    Ok(match outcome {
        Some(RedundancyMorphism::Obstruction(_)) => ExitCode::from(1),
        _ => ExitCode::SUCCESS,
    })
}
