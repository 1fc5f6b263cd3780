use fusioncat::{
    all_passed, catalog_data, catalog_get, load, suite, to_json_string, validate, Category, CategoryData, Check, Error,
    FusionSubcategory, CATALOG_NAMES,
};

use crate::args::{Cli, Command, Source};
use crate::exit;
use crate::report::{Cell, Report, Section};

pub enum Output {
    Report(Report, i32),
    /// Printed verbatim (catalog export).
    Raw(String),
}

pub enum Failure {
    Usage(String),
    Engine(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

type Out = std::result::Result<Output, Failure>;

pub fn dispatch(cli: &Cli) -> Out {
    match &cli.command {
        Command::Validate(src) => validate_cmd(src),
        Command::Info(src) => info(&open(src)?),
        Command::Subcats(src) => subcats(&open(src)?),
        Command::Centralizer { source, subcat } => centralizer(&open(source)?, subcat.as_deref()),
        Command::Classes(src) => classes(&open(src)?),
        Command::Grading(src) => grading(&open(src)?),
        Command::Verify(src) => verify_cmd(src),
        Command::Catalog { export } => catalog(export.as_deref()),
    }
}

fn load_data(src: &Source) -> fusioncat::Result<CategoryData> {
    match (&src.file, &src.catalog) {
        (Some(path), _) => load(path).map_err(|e| match e {
            Error::Io(io) => Error::Io(std::io::Error::new(io.kind(), format!("{}: {io}", path.display()))),
            other => other,
        }),
        (None, Some(name)) => catalog_data(name),
        (None, None) => unreachable!("clap requires a source"),
    }
}

fn open(src: &Source) -> fusioncat::Result<Category> {
    Category::new(load_data(src)?)
}

fn header(cat: &Category, command: &str) -> Report {
    Report::new(command, Some((cat.name().to_string(), cat.data().conductor)))
}

fn finish(report: Report, fail_code: i32) -> Out {
    let code = if all_passed(&report.checks) { exit::OK } else { fail_code };
    Ok(Output::Report(report, code))
}

fn yes_no(b: bool) -> Cell {
    Cell::from(if b { "yes" } else { "no" })
}

fn labels_of(cat: &Category, members: &[usize]) -> String {
    let names: Vec<&str> = members.iter().map(|&i| cat.label(i)).collect();
    format!("{{{}}}", names.join(","))
}

fn validate_cmd(src: &Source) -> Out {
    let data = load_data(src)?;
    let mut report = Report::new("validate", Some((data.name.clone(), data.conductor)));
    let mut s = Section::new("input", &["field", "value"]);
    s.entry("kind", data.kind().as_str());
    s.entry("rank", data.rank().to_string());
    report.sections.push(s);
    report.checks = validate(&data);
    finish(report, exit::VALIDATION)
}

fn decomposition(cat: &Category, i: usize, j: usize) -> String {
    let terms: Vec<String> = (0..cat.rank())
        .filter_map(|k| match cat.n(i, j, k) {
            0 => None,
            1 => Some(cat.label(k).to_string()),
            m => Some(format!("{m}·{}", cat.label(k))),
        })
        .collect();
    terms.join(" + ")
}

fn info(cat: &Category) -> Out {
    let mut report = header(cat, "info");
    let mut summary = Section::new("summary", &["field", "value"]);
    summary.entry("kind", cat.data().kind().as_str());
    summary.entry("rank", cat.rank().to_string());
    summary.entry("global dimension", cat.global_dim());
    summary.entry("integral", yes_no(cat.is_integral()));
    summary.entry("character table", yes_no(cat.has_char_table()));
    report.sections.push(summary);

    let twists = cat.modular().and_then(|m| m.twists.as_ref());
    let mut objects = Section::new("objects", &["object", "dual", "dim", "twist"]);
    for i in 0..cat.rank() {
        let twist = twists.map_or(Cell::from("-"), |t| Cell::from(&t[i]));
        objects.row(vec![cat.label(i).into(), cat.label(cat.dual(i)).into(), cat.dim(i).into(), twist]);
    }
    report.sections.push(objects);

    let mut fusion = Section::new("fusion", &["product", "decomposition"]);
    for i in 0..cat.rank() {
        for j in i..cat.rank() {
            fusion.row(vec![
                format!("{} ⊗ {}", cat.label(i), cat.label(j)).into(),
                decomposition(cat, i, j).into(),
            ]);
        }
    }
    report.sections.push(fusion);

    if let Some(m) = cat.modular() {
        let mut columns = vec![""];
        columns.extend(cat.labels().iter().map(String::as_str));
        let mut s = Section::new("s-matrix", &columns);
        for i in 0..cat.rank() {
            let mut row = vec![Cell::from(cat.label(i))];
            row.extend(m.s_matrix.row(i).iter().map(Cell::from));
            s.row(row);
        }
        report.sections.push(s);
    }
    finish(report, exit::VALIDATION)
}

fn subcats(cat: &Category) -> Out {
    let mut report = header(cat, "subcats");
    let subs = cat.enumerate_subcats()?;
    let mut table = Section::new("subcategories", &["members", "rank", "dim", "index", "L_D", "centralizer"]);
    for d in &subs {
        let (index, support) = if cat.has_char_table() {
            let inv = cat.subcat_invariants(d)?;
            (Cell::from(inv.index), Cell::from(format!("{:?}", inv.support_l)))
        } else {
            ("-".into(), "-".into())
        };
        let centralizer = if cat.is_modular() {
            Cell::from(cat.centralizer_smatrix(d)?.display(cat))
        } else {
            "-".into()
        };
        table.row(vec![
            d.display(cat).into(),
            d.len().to_string().into(),
            cat.subset_dim(d.members()).into(),
            index,
            support,
            centralizer,
        ]);
    }
    report.sections.push(table);
    let joins = cat.enumerate_subcats_by_joins();
    report.checks.push(Check::from_search(
        "enumeration-agreement",
        format!("{} subcategories by both enumerations", subs.len()),
        (joins != subs).then(|| format!("joins give {}", joins.len())),
    ));
    finish(report, exit::IDENTITY)
}

fn parse_generators(cat: &Category, labels: &str) -> std::result::Result<Vec<usize>, Failure> {
    labels
        .split(',')
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| cat.index_of(l).ok_or_else(|| Failure::Usage(format!("unknown object label `{l}`"))))
        .collect()
}

fn centralizer(cat: &Category, labels: Option<&str>) -> Out {
    cat.s_matrix("centralizers")?;
    let mut report = header(cat, "centralizer");
    match labels {
        Some(labels) => {
            let gens = parse_generators(cat, labels)?;
            let d = cat.generate_subcat(&gens);
            let via_s = cat.centralizer_smatrix(&d)?;
            let res = cat.centralizer_theorem(&d)?;
            let mut s = Section::new("centralizer", &["field", "value"]);
            s.entry("generators", labels_of(cat, &gens));
            s.entry("D", d.display(cat));
            s.entry("D' (s-criterion)", via_s.display(cat));
            s.entry("D' (support of f_Q(λ_D))", res.centralizer.display(cat));
            s.entry("A_0", labels_of(cat, &res.support_a0));
            s.entry("f_Q(λ_D)", Cell::Vector { basis: "E", values: res.fq_lambda.coeffs.clone() });
            s.entry("dim D", cat.subset_dim(d.members()));
            s.entry("dim D'", cat.subset_dim(res.centralizer.members()));
            report.sections.push(s);
            report.checks = cat.verify_main_identity(&d);
        }
        None => {
            let mut table = Section::new("centralizers", &["D", "D' (s-criterion)", "D' (f_Q(λ_D))", "dim D · dim D'"]);
            for d in cat.enumerate_subcats()? {
                let via_s = cat.centralizer_smatrix(&d)?;
                let theorem = match cat.centralizer_theorem(&d) {
                    Ok(r) => r.centralizer.display(cat).into(),
                    Err(e) => Cell::from(format!("error: {e}")),
                };
                let product = cat.subset_dim(d.members()) * cat.subset_dim(via_s.members());
                table.row(vec![d.display(cat).into(), via_s.display(cat).into(), theorem, product.into()]);
                report.checks.extend(cat.verify_main_identity(&d));
            }
            report.sections.push(table);
            report.checks.extend(cat.double_centralizer_check()?);
        }
    }
    finish(report, exit::IDENTITY)
}

fn class_label(cat: &Category, j: usize) -> String {
    if cat.is_modular() {
        cat.label(j).to_string()
    } else {
        format!("C{j}")
    }
}

fn classes(cat: &Category) -> Out {
    let conj = cat.conjugacy_data()?;
    let mut report = header(cat, "classes");
    let mut table = Section::new("classes", &["class", "|C^j|", "n_j", "F_j", "c̄_j"]);
    for j in 0..cat.rank() {
        table.row(vec![
            class_label(cat, j).into(),
            (&conj.sizes[j]).into(),
            (&conj.n[j]).into(),
            Cell::Vector { basis: "χ", values: conj.idempotents[j].coeffs.clone() },
            Cell::Vector { basis: "E", values: conj.class_sums[j].coeffs.clone() },
        ]);
    }
    report.sections.push(table);

    let class_names: Vec<String> = (0..cat.rank()).map(|j| class_label(cat, j)).collect();
    let mut columns = vec![""];
    columns.extend(class_names.iter().map(String::as_str));
    let mut alpha = Section::new("character table", &columns);
    for i in 0..cat.rank() {
        let mut row = vec![Cell::from(cat.label(i))];
        row.extend(conj.alpha.row(i).iter().map(Cell::from));
        alpha.row(row);
    }
    report.sections.push(alpha);

    if cat.is_modular() {
        let mut s = Section::new("structure constants", &["i", "j", "c_ij^l", "rational"]);
        let products = cat.class_sum_products()?;
        let mut bad = None;
        for p in &products {
            s.row(vec![
                cat.label(p.i).into(),
                cat.label(p.j).into(),
                Cell::Vector { basis: "c̄", values: p.constants.clone() },
                yes_no(p.rational),
            ]);
            if !p.verified && bad.is_none() {
                bad = Some(format!("c̄_{} c̄_{} does not match (d_i d_j/d_l) N_ij^l", cat.label(p.i), cat.label(p.j)));
            }
        }
        report.sections.push(s);
        report.checks.push(Check::from_search(
            "class-sum-products",
            "c̄_i c̄_j = Σ_l (d_i d_j/d_l) N_ij^l c̄_l",
            bad,
        ));
    }
    finish(report, exit::IDENTITY)
}

fn grading(cat: &Category) -> Out {
    let g = cat.grading()?;
    let p = cat.prime_index_check()?;
    let mut report = header(cat, "grading");
    let mut summary = Section::new("grading", &["field", "value"]);
    summary.entry("|U_C|", g.order().to_string());
    summary.entry("abelian", yes_no(g.abelian));
    summary.entry("C_ad", g.adjoint.display(cat));
    summary.entry("C_pt", g.pointed.display(cat));
    report.sections.push(summary);

    let mut comps = Section::new("components", &["component", "objects"]);
    for (a, members) in g.components.iter().enumerate() {
        comps.row(vec![format!("g{a}").into(), labels_of(cat, members).into()]);
    }
    report.sections.push(comps);

    let names: Vec<String> = (0..g.order()).map(|a| format!("g{a}")).collect();
    let mut columns = vec!["⊗"];
    columns.extend(names.iter().map(String::as_str));
    let mut table = Section::new("group table", &columns);
    for (a, row) in g.group_table.iter().enumerate() {
        let mut cells = vec![Cell::from(names[a].clone())];
        cells.extend(row.iter().map(|&b| Cell::from(names[b].clone())));
        table.row(cells);
    }
    report.sections.push(table);

    let mut prime = Section::new("prime index", &["field", "value"]);
    prime.entry("applicable", yes_no(p.applicable));
    if let Some(reason) = &p.reason {
        prime.entry("reason", reason.as_str());
    }
    if let (Some(dim), Some(q)) = (p.dim, p.prime) {
        prime.entry("dim C", dim.to_string());
        prime.entry("p", q.to_string());
        let subs: Vec<String> = p.subcats.iter().map(|d: &FusionSubcategory| d.display(cat)).collect();
        prime.entry("index-p subcategories", subs.join(" "));
        let groups: Vec<String> = p
            .subgroups
            .iter()
            .map(|h| format!("{{{}}}", h.iter().map(|a| format!("g{a}")).collect::<Vec<_>>().join(",")))
            .collect();
        prime.entry("index-p subgroups", groups.join(" "));
        let pairs: Vec<String> = p.bijection.iter().map(|(h, d)| format!("{} ↔ {}", groups[*h], subs[*d])).collect();
        prime.entry("bijection", pairs.join(", "));
        prime.entry("all contain C_ad", yes_no(p.contain_adjoint));
    }
    report.sections.push(prime);

    report.checks = g.checks.clone();
    report.checks.push(if !p.applicable {
        Check::skip("prime-index", p.reason.clone().unwrap_or_default())
    } else if p.passed {
        Check::pass("prime-index", format!("{} subcategories ↔ {} subgroups", p.subcats.len(), p.subgroups.len()))
    } else {
        Check::fail("prime-index", "no index-p bijection")
    });
    finish(report, exit::IDENTITY)
}

/// Data errors surface as failed checks here, so a corrupted input exits 2.
fn verify_cmd(src: &Source) -> Out {
    let data = match load_data(src) {
        Ok(d) => d,
        Err(e) if crate::exit_code(&e) == exit::INPUT => return Err(e.into()),
        Err(e) => {
            let mut report = Report::new("verify", None);
            report.checks.push(Check::fail("load", e.to_string()));
            return finish(report, exit::IDENTITY);
        }
    };
    let mut report = Report::new("verify", Some((data.name.clone(), data.conductor)));
    report.checks = match Category::new_unchecked(data.clone()) {
        Ok(cat) => suite::verify(&cat),
        Err(e) => {
            let mut checks = validate(&data);
            checks.push(Check::fail("load", e.to_string()));
            checks
        }
    };
    finish(report, exit::IDENTITY)
}

fn catalog(export: Option<&str>) -> Out {
    if let Some(name) = export {
        return Ok(Output::Raw(to_json_string(&catalog_data(name)?)));
    }
    let mut report = Report::new("catalog", None);
    let mut s = Section::new("catalog", &["name", "kind", "rank", "conductor", "global dimension"]);
    for name in CATALOG_NAMES {
        let cat = catalog_get(name)?;
        s.row(vec![
            (*name).into(),
            cat.data().kind().as_str().into(),
            cat.rank().to_string().into(),
            cat.data().conductor.to_string().into(),
            cat.global_dim().into(),
        ]);
    }
    report.sections.push(s);
    finish(report, exit::OK)
}
