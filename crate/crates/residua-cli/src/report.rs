//! JSON output shapes for every command. Key order is declaration order,
//! lists arrive canonically sorted from the library, and all indices are
//! 1-based positions in the input generator list.

use serde::Serialize;

use residua::{
    annihilator_bounds, briancon_skoda_verify, essential_sets, rees_valuations, strictness_witness,
    EssentialSet, ExponentVector, MonomialIdeal, NewtonPolyhedron,
};

use crate::input::{int64, monomial_string, ParsedIdeal};

#[derive(Serialize)]
pub struct FacetOut {
    pub normal: Vec<i64>,
    pub offset: i64,
    pub compact: bool,
    pub touching: Vec<usize>,
}

#[derive(Serialize)]
pub struct PolyhedronOut {
    pub n: usize,
    pub points: Vec<Vec<i64>>,
    pub facets: Vec<FacetOut>,
}

#[derive(Serialize)]
pub struct ValuationOut {
    pub rho: Vec<i64>,
    pub c: i64,
}

#[derive(Serialize)]
pub struct EssentialOut {
    pub indices: Vec<usize>,
    pub rho: Vec<i64>,
    pub c: i64,
    pub determinant: i64,
}

#[derive(Serialize)]
pub struct IdealOut {
    pub n: usize,
    pub variables: Vec<String>,
    pub generators: Vec<String>,
}

#[derive(Serialize)]
pub struct CiOut {
    pub complete_intersection: bool,
}

#[derive(Serialize)]
pub struct BsOut {
    pub power: usize,
    pub contained: bool,
}

#[derive(Serialize)]
pub struct BoundsOut {
    pub lower_generators: Vec<String>,
    pub upper_generators: Vec<String>,
    pub essential_count: usize,
    pub complete_intersection: bool,
}

#[derive(Serialize)]
pub struct SocleOut {
    pub monomials: Vec<String>,
    pub colength: usize,
}

#[derive(Serialize)]
pub struct DecomposeOut {
    pub components: Vec<Vec<String>>,
}

#[derive(Serialize)]
pub struct WitnessOut {
    pub indices: Vec<usize>,
    pub monomial: String,
    pub rho: Vec<i64>,
    pub ord: i64,
    pub required: i64,
}

#[derive(Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub input: IdealOut,
    pub newton_polyhedron: PolyhedronOut,
    pub rees_valuations: Vec<ValuationOut>,
    pub essential_sets: Vec<EssentialOut>,
    pub complete_intersection: bool,
    pub briancon_skoda: BsOut,
    pub annihilator_bounds: BoundsOut,
    pub socle: Vec<String>,
    pub colength: usize,
    pub strictness_witnesses: Vec<WitnessOut>,
}

pub const SCHEMA: &str = "residua/1";

fn int_vec(coords: &[num_bigint::BigInt]) -> Result<Vec<i64>, String> {
    coords.iter().map(int64).collect()
}

pub fn exponents_out(points: &[ExponentVector]) -> Result<Vec<Vec<i64>>, String> {
    points.iter().map(|p| int_vec(p.coords())).collect()
}

pub fn polyhedron_out(np: &NewtonPolyhedron) -> Result<PolyhedronOut, String> {
    let facets = np
        .facets()
        .iter()
        .map(|f| {
            Ok(FacetOut {
                normal: int_vec(f.normal.coords())?,
                offset: int64(&f.offset)?,
                compact: f.compact,
                touching: f.touching.iter().map(|i| i + 1).collect(),
            })
        })
        .collect::<Result<Vec<_>, String>>()?;
    Ok(PolyhedronOut {
        n: np.dim(),
        points: exponents_out(np.points())?,
        facets,
    })
}

pub fn valuations_out(a: &MonomialIdeal) -> Result<Vec<ValuationOut>, String> {
    rees_valuations(a)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|v| {
            Ok(ValuationOut {
                rho: int_vec(v.rho.coords())?,
                c: int64(&v.c)?,
            })
        })
        .collect()
}

fn essential_out(e: &EssentialSet) -> Result<EssentialOut, String> {
    Ok(EssentialOut {
        indices: e.indices.iter().map(|i| i + 1).collect(),
        rho: int_vec(e.facet.normal.coords())?,
        c: int64(&e.facet.offset)?,
        determinant: int64(&e.determinant)?,
    })
}

pub fn essentials_out(sets: &[EssentialSet]) -> Result<Vec<EssentialOut>, String> {
    sets.iter().map(essential_out).collect()
}

pub fn ideal_out(a: &MonomialIdeal, variables: &[String]) -> IdealOut {
    IdealOut {
        n: a.dim(),
        variables: variables.to_vec(),
        generators: a
            .gens()
            .iter()
            .map(|g| monomial_string(g, variables))
            .collect(),
    }
}

pub fn build_report(parsed: &ParsedIdeal) -> Result<Report, String> {
    let variables = &parsed.variables;
    let tuple = &parsed.tuple;
    let n = parsed.n();
    let a = parsed.ideal();

    let np = tuple.newton_polyhedron();
    let sets = essential_sets(tuple).map_err(|e| e.to_string())?;
    let ci = a.is_complete_intersection().map_err(|e| e.to_string())?;
    let contained = briancon_skoda_verify(&a).map_err(|e| e.to_string())?;
    let bounds = annihilator_bounds(tuple).map_err(|e| e.to_string())?;
    let socle = a.socle().map_err(|e| e.to_string())?;
    let colength = a.colength().map_err(|e| e.to_string())?;

    let mut witnesses = Vec::new();
    if n >= 2 {
        for e in &sets {
            let w = strictness_witness(tuple, e).map_err(|e| e.to_string())?;
            let ord = w
                .failing_valuation
                .ord(&w.monomial)
                .map_err(|e| e.to_string())?;
            witnesses.push(WitnessOut {
                indices: e.indices.iter().map(|i| i + 1).collect(),
                monomial: monomial_string(&w.monomial, variables),
                rho: int_vec(w.failing_valuation.rho.coords())?,
                ord: int64(&ord)?,
                required: int64(&(num_bigint::BigInt::from(n) * &w.failing_valuation.c))?,
            });
        }
    }

    Ok(Report {
        schema: SCHEMA,
        input: IdealOut {
            n,
            variables: variables.clone(),
            generators: tuple
                .entries()
                .iter()
                .map(|g| monomial_string(g, variables))
                .collect(),
        },
        newton_polyhedron: polyhedron_out(&np)?,
        rees_valuations: valuations_out(&a)?,
        essential_sets: essentials_out(&sets)?,
        complete_intersection: ci,
        briancon_skoda: BsOut {
            power: n,
            contained,
        },
        annihilator_bounds: BoundsOut {
            lower_generators: bounds
                .lower
                .gens()
                .iter()
                .map(|g| monomial_string(g, variables))
                .collect(),
            upper_generators: bounds
                .upper
                .gens()
                .iter()
                .map(|g| monomial_string(g, variables))
                .collect(),
            essential_count: bounds.essential_count,
            complete_intersection: bounds.is_ci,
        },
        socle: socle
            .iter()
            .map(|s| monomial_string(s, variables))
            .collect(),
        colength,
        strictness_witnesses: witnesses,
    })
}

/// Pretty JSON with a trailing newline; the byte format every command and
/// the golden files agree on. Arrays of scalars stay on one line so
/// exponent vectors read as vectors.
pub fn render<T: Serialize>(value: &T) -> Result<String, String> {
    let value = serde_json::to_value(value).map_err(|e| e.to_string())?;
    let mut out = String::new();
    write_value(&value, 0, &mut out);
    out.push('\n');
    Ok(out)
}

fn is_scalar(v: &serde_json::Value) -> bool {
    !matches!(
        v,
        serde_json::Value::Array(_) | serde_json::Value::Object(_)
    )
}

fn write_value(v: &serde_json::Value, indent: usize, out: &mut String) {
    let pad = |depth: usize| "  ".repeat(depth);
    match v {
        serde_json::Value::Array(items) if items.iter().all(is_scalar) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push_str(&item.to_string());
            }
            out.push(']');
        }
        serde_json::Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(item, indent + 1, out);
                if i + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        serde_json::Value::Object(map) => {
            if map.is_empty() {
                out.push_str("{}");
                return;
            }
            out.push_str("{\n");
            for (i, (key, value)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&serde_json::Value::String(key.clone()).to_string());
                out.push_str(": ");
                write_value(value, indent + 1, out);
                if i + 1 < map.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}
