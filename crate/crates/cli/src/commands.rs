use std::sync::Arc;

use xmlift::derivation::{find_sections, lifting_map};
use xmlift::groupoid::{action_groupoid, is_covering_morphism, pullback_action, CoveringReport};
use xmlift::lifting::{lift_morphism, pullback_functor, pullback_lifting};
use xmlift::{
    CrossedModule, DerivationSemigroup, FiniteGroup, GroupHom, Homotopy, Lifting, XModMorphism,
};

use crate::error::{computation, CliError, Result};
use crate::fixture::{Document, Object};
use crate::report::Report;

pub const COMMANDS: [&str; 15] = [
    "check",
    "classify",
    "liftings",
    "lift-morphism",
    "pullback",
    "homotopy-check",
    "homotopy-lift",
    "derivations",
    "whitehead",
    "lift-derivation",
    "sections",
    "descend",
    "action-groupoid",
    "covering-check",
    "pullback-action",
];

/// Runs one command over every applicable declaration, in declaration
/// order.
pub fn run_command(command: &str, doc: &Document, bound: usize) -> Result<Report> {
    let mut r = Report::new();
    r.text("command", command);
    match command {
        "check" => check(doc, &mut r),
        "classify" => classify(doc, &mut r),
        "liftings" => liftings(doc, bound, &mut r)?,
        "lift-morphism" => lift_morphisms(doc, &mut r),
        "pullback" => pullbacks(doc, &mut r)?,
        "homotopy-check" => homotopy_check(doc, &mut r),
        "homotopy-lift" => homotopy_lift(doc, &mut r)?,
        "derivations" => derivations(doc, bound, &mut r)?,
        "whitehead" => whitehead(doc, bound, &mut r)?,
        "lift-derivation" => lift_derivations(doc, bound, &mut r)?,
        "sections" => sections(doc, bound, &mut r)?,
        "descend" => descend(doc, bound, &mut r)?,
        "action-groupoid" => action_groupoids(doc, &mut r)?,
        "covering-check" => covering_check(doc, &mut r)?,
        "pullback-action" => pullback_actions(doc, &mut r)?,
        other => return Err(CliError::UnknownCommand(other.to_string())),
    }
    Ok(r)
}

fn labels(g: &FiniteGroup, values: &[usize]) -> Option<Vec<String>> {
    g.names()
        .map(|names| values.iter().map(|&v| names[v].clone()).collect())
}

/// Elements of `g`, with names when the group has them.
fn elements(r: &mut Report, key: String, g: &FiniteGroup, values: Vec<usize>) {
    match labels(g, &values) {
        Some(l) => r.labelled(key, values, l),
        None => r.indices(key, values),
    }
}

fn hom(r: &mut Report, key: &str, h: &GroupHom) {
    elements(r, key.to_string(), h.target(), h.map().to_vec());
}

fn group(r: &mut Report, key: &str, g: &FiniteGroup) {
    r.text(format!("{key}.order"), g.order());
    if let Some(names) = g.names() {
        r.labelled(
            format!("{key}.elements"),
            g.elements().collect(),
            names.to_vec(),
        );
    }
    r.full_table(format!("{key}.table"), g.rows());
}

fn check(doc: &Document, r: &mut Report) {
    r.text("declarations", doc.declarations().len());
    for d in doc.declarations() {
        let key = &d.name;
        r.text(format!("{key}.kind"), d.object.kind());
        r.text(format!("{key}.line"), d.line);
        match &d.object {
            Object::Group(g) => r.text(format!("{key}.order"), g.order()),
            Object::XMod(x) => {
                let s = x.verify_structure();
                r.text(format!("{key}.image-normal"), s.image_normal);
                r.text(format!("{key}.kernel-central"), s.kernel_central);
                r.text(format!("{key}.image-fixes-center"), s.image_fixes_center);
            }
            _ => {}
        }
        r.text(format!("{key}.status"), "valid");
    }
    r.text("status", "ok");
}

fn classify(doc: &Document, r: &mut Report) {
    for (name, x) in doc.xmods() {
        r.text(format!("{name}.class"), x.classify());
        let kernel = x.boundary().kernel();
        elements(
            r,
            format!("{name}.kernel"),
            x.a(),
            kernel.elements().to_vec(),
        );
        let image = x.boundary().image();
        elements(r, format!("{name}.image"), x.b(), image.elements().to_vec());
        r.text(format!("{name}.a-abelian"), x.a().is_abelian());
    }
}

fn lifting_data(r: &mut Report, key: &str, l: &Lifting) {
    let a = l.base().a();
    let kphi = l.phi().kernel();
    elements(r, format!("{key}.ker-phi"), a, kphi.elements().to_vec());
    group(r, &format!("{key}.X"), l.x());
    hom(r, &format!("{key}.phi"), l.phi());
    hom(r, &format!("{key}.omega"), l.omega());
    let komega = l.omega().kernel();
    elements(
        r,
        format!("{key}.ker-omega"),
        l.x(),
        komega.elements().to_vec(),
    );
}

fn liftings(doc: &Document, bound: usize, r: &mut Report) -> Result<()> {
    for (name, x) in doc.xmods() {
        let ls = Lifting::enumerate(x, bound).map_err(computation(name))?;
        elements(
            r,
            format!("{name}.kernel"),
            x.a(),
            x.boundary().kernel().elements().to_vec(),
        );
        r.text(format!("{name}.liftings"), ls.len());
        for (i, l) in ls.iter().enumerate() {
            lifting_data(r, &format!("{name}.lifting.{i}"), l);
        }
    }
    Ok(())
}

/// Every declared (morphism, lifting) pair where the lifting is over the
/// morphism's target.
fn morphism_lifting_pairs(doc: &Document) -> Vec<(&str, &Arc<XModMorphism>, &str, &Arc<Lifting>)> {
    let mut out = Vec::new();
    for (mn, m) in doc.morphisms() {
        for (ln, l) in doc.liftings() {
            if **l.base() == **m.target() {
                out.push((mn, m, ln, l));
            }
        }
    }
    out
}

fn lift_morphisms(doc: &Document, r: &mut Report) {
    let pairs = morphism_lifting_pairs(doc);
    r.text("pairs", pairs.len());
    for (mn, m, ln, l) in pairs {
        let key = format!("{mn}.{ln}");
        match lift_morphism(m, l) {
            Ok(up) => {
                r.text(format!("{key}.status"), "lifted");
                hom(r, &format!("{key}.g-tilde"), up.f2());
            }
            Err(e) => r.text(format!("{key}.status"), format!("not liftable: {e}")),
        }
    }
}

fn pullbacks(doc: &Document, r: &mut Report) -> Result<()> {
    let pairs = morphism_lifting_pairs(doc);
    r.text("pairs", pairs.len());
    for (mn, m, ln, l) in pairs {
        let key = format!("{mn}.{ln}");
        let pb = pullback_lifting(m, l).map_err(computation(&key))?;
        r.table(
            format!("{key}.pairs"),
            pb.pullback
                .pairs
                .iter()
                .map(|&(x, b)| vec![Some(x), Some(b)])
                .collect(),
        );
        hom(r, &format!("{key}.psi"), pb.lifting.phi());
        hom(r, &format!("{key}.pi1"), pb.projection.f2());
        hom(r, &format!("{key}.pi2"), pb.lifting.omega());
        r.text(format!("{key}.status"), "valid");
    }
    for (mn, m) in doc.morphisms() {
        for (hn, h) in doc.lifting_morphisms() {
            if **h.source().base() != **m.target() {
                continue;
            }
            let key = format!("{mn}.{hn}");
            let pulled = pullback_functor(m, h).map_err(computation(&key))?;
            hom(r, &format!("{key}.h-times-1"), pulled.f());
        }
    }
    Ok(())
}

fn morphism_data(r: &mut Report, key: &str, m: &XModMorphism) {
    hom(r, &format!("{key}.f1"), m.f1());
    hom(r, &format!("{key}.f2"), m.f2());
}

fn homotopy_check(doc: &Document, r: &mut Report) {
    for (name, h) in doc.homotopies() {
        elements(
            r,
            format!("{name}.d"),
            h.from().target().a(),
            h.d().to_vec(),
        );
        morphism_data(r, &format!("{name}.from"), h.from());
        morphism_data(r, &format!("{name}.to"), h.to());
        r.text(format!("{name}.status"), "valid");
    }
}

fn homotopy_lift(doc: &Document, r: &mut Report) -> Result<()> {
    for (name, h) in doc.homotopies() {
        for (ln, l) in doc.liftings() {
            if **l.base() != **h.from().target() {
                continue;
            }
            let key = format!("{name}.{ln}");
            match (lift_morphism(h.from(), l), lift_morphism(h.to(), l)) {
                (Ok(uf), Ok(ut)) => {
                    let (uf, ut) = (Arc::new(uf), Arc::new(ut));
                    let up: Homotopy = h.lift(l, &uf, &ut).map_err(computation(&key))?;
                    hom(r, &format!("{key}.from.g-tilde"), uf.f2());
                    hom(r, &format!("{key}.to.g-tilde"), ut.f2());
                    elements(r, format!("{key}.d"), l.base().a(), up.d().to_vec());
                    r.text(format!("{key}.status"), "lifted");
                }
                (Err(e), _) | (_, Err(e)) => {
                    r.text(
                        format!("{key}.status"),
                        format!("endpoints not liftable: {e}"),
                    );
                }
            }
        }
    }
    Ok(())
}

fn semigroup(name: &str, x: &Arc<CrossedModule>, bound: usize) -> Result<DerivationSemigroup> {
    DerivationSemigroup::enumerate(x, bound).map_err(computation(name))
}

fn derivations(doc: &Document, bound: usize, r: &mut Report) -> Result<()> {
    for (name, x) in doc.xmods() {
        let s = semigroup(name, x, bound)?;
        r.text(format!("{name}.derivations"), s.len());
        r.full_table(
            format!("{name}.values"),
            s.elements().iter().map(|d| d.values().to_vec()).collect(),
        );
        r.indices(format!("{name}.units"), s.units().to_vec());
        r.full_table(format!("{name}.product"), s.product().to_vec());
    }
    Ok(())
}

fn whitehead(doc: &Document, bound: usize, r: &mut Report) -> Result<()> {
    for (name, x) in doc.xmods() {
        let s = semigroup(name, x, bound)?;
        let units = s.units();
        r.text(format!("{name}.whitehead-order"), units.len());
        r.indices(format!("{name}.units"), units.to_vec());
        let table = units
            .iter()
            .map(|&i| {
                units
                    .iter()
                    .map(|&j| units.iter().position(|&u| u == s.product()[i][j]))
                    .collect()
            })
            .collect();
        r.table(format!("{name}.unit-product"), table);
        r.text(format!("{name}.formulas"), "agree");
        for (i, d) in s.elements().iter().enumerate() {
            let key = format!("{name}.derivation.{i}");
            hom(
                r,
                &format!("{key}.theta"),
                &d.theta_hom().map_err(computation(&key))?,
            );
            hom(
                r,
                &format!("{key}.sigma"),
                &d.sigma_hom().map_err(computation(&key))?,
            );
            let cert = d.certify_regularity(Some(&s)).map_err(computation(&key))?;
            r.text(format!("{key}.regular"), cert.is_regular());
        }
    }
    for (name, d) in doc.derivations() {
        let s = semigroup(name, d.crossed_module(), bound)?;
        let i = s
            .index_of(d.values())
            .ok_or_else(|| computation(name)(xmlift::Error::Defect("not enumerated".into())))?;
        r.text(format!("{name}.index"), i);
        match s.inverse_of(i) {
            Some(j) => r.text(format!("{name}.inverse"), j),
            None => r.text(format!("{name}.inverse"), "none"),
        }
    }
    Ok(())
}

fn lift_derivations(doc: &Document, bound: usize, r: &mut Report) -> Result<()> {
    for (name, x) in doc.xmods() {
        for (ln, l) in doc.liftings() {
            if **l.base() != **x {
                continue;
            }
            let key = format!("{name}.{ln}");
            let base = semigroup(name, x, bound)?;
            let upper = semigroup(ln, l.upper(), bound)?;
            let map = lifting_map(&base, &upper, l).map_err(computation(&key))?;
            r.indices(format!("{key}.map"), map.indices);
            r.text(format!("{key}.homomorphism"), map.homomorphism);
            r.text(format!("{key}.injective"), map.injective);
            r.text(format!("{key}.units-to-units"), map.units_to_units);
        }
    }
    for (name, d) in doc.derivations() {
        for (ln, l) in doc.liftings() {
            if **l.base() != **d.crossed_module() {
                continue;
            }
            let key = format!("{name}.{ln}");
            let up = d.lift(l).map_err(computation(&key))?;
            elements(
                r,
                format!("{key}.lifted"),
                l.base().a(),
                up.values().to_vec(),
            );
            r.text(format!("{key}.theta-agrees"), up.theta() == d.theta());
            r.text(format!("{key}.regular"), up.is_regular());
        }
    }
    Ok(())
}

fn sections(doc: &Document, bound: usize, r: &mut Report) -> Result<()> {
    for (name, l) in doc.liftings() {
        let ss = find_sections(l.omega(), bound).map_err(computation(name))?;
        r.text(format!("{name}.sections"), ss.len());
        for (i, s) in ss.iter().enumerate() {
            hom(r, &format!("{name}.section.{i}"), s);
        }
    }
    Ok(())
}

fn descend(doc: &Document, bound: usize, r: &mut Report) -> Result<()> {
    for (name, l) in doc.liftings() {
        let ss = find_sections(l.omega(), bound).map_err(computation(name))?;
        r.text(format!("{name}.sections"), ss.len());
        if ss.is_empty() {
            continue;
        }
        let upper = semigroup(name, l.upper(), bound)?;
        let base = semigroup(name, l.base(), bound)?;
        for (i, s) in ss.iter().enumerate() {
            let key = format!("{name}.section.{i}");
            let mut descended = Vec::with_capacity(upper.len());
            for d in upper.elements() {
                let down = d.descend(l, s).map_err(computation(&key))?;
                let j = base.index_of(down.values()).ok_or_else(|| {
                    computation(&key)(xmlift::Error::Defect("descent not enumerated".into()))
                })?;
                descended.push(j);
            }
            r.indices(format!("{key}.descent"), descended);
            let round_trip = base.elements().iter().all(|d| {
                d.lift(l)
                    .and_then(|up| up.descend(l, s))
                    .is_ok_and(|back| back == *d)
            });
            r.text(
                format!("{key}.lift-then-descend"),
                if round_trip { "identity" } else { "differs" },
            );
        }
    }
    Ok(())
}

fn covering(r: &mut Report, key: &str, c: &CoveringReport) {
    r.text(format!("{key}.covering"), c.covering);
    match c.witness {
        Some(w) => r.text(format!("{key}.witness"), w),
        None => r.text(format!("{key}.witness"), "none"),
    }
    r.full_table(
        format!("{key}.stars"),
        c.stars.iter().map(|&(u, d)| vec![u, d]).collect(),
    );
}

fn action_groupoids(doc: &Document, r: &mut Report) -> Result<()> {
    for (name, act) in doc.gg_actions() {
        let ag = action_groupoid(act).map_err(computation(name))?;
        let gd = ag.groupoid.groupoid();
        r.text(format!("{name}.objects"), gd.objects());
        r.text(format!("{name}.morphisms"), gd.len());
        r.table(
            format!("{name}.pairs"),
            ag.pairs
                .iter()
                .map(|&(g, x)| vec![Some(g), Some(x)])
                .collect(),
        );
        r.indices(
            format!("{name}.source"),
            (0..gd.len()).map(|g| gd.source(g)).collect(),
        );
        r.indices(
            format!("{name}.target"),
            (0..gd.len()).map(|g| gd.target(g)).collect(),
        );
        covering(
            r,
            &format!("{name}.projection"),
            &is_covering_morphism(ag.projection.functor()),
        );
    }
    Ok(())
}

fn covering_check(doc: &Document, r: &mut Report) -> Result<()> {
    for (name, f) in doc.gg_morphisms() {
        covering(r, name, &is_covering_morphism(f.functor()));
    }
    for (name, act) in doc.gg_actions() {
        let ag = action_groupoid(act).map_err(computation(name))?;
        covering(
            r,
            &format!("{name}.projection"),
            &is_covering_morphism(ag.projection.functor()),
        );
    }
    Ok(())
}

fn pullback_actions(doc: &Document, r: &mut Report) -> Result<()> {
    for (fname, f) in doc.gg_morphisms() {
        for (aname, act) in doc.gg_actions() {
            if **f.target() != **act.group_groupoid() {
                continue;
            }
            let key = format!("{fname}.{aname}");
            let pb = pullback_action(f, act).map_err(computation(&key))?;
            r.table(
                format!("{key}.space"),
                pb.pullback
                    .pairs
                    .iter()
                    .map(|&(x, o)| vec![Some(x), Some(o)])
                    .collect(),
            );
            r.indices(format!("{key}.omega"), pb.action.omega().map().to_vec());
            r.table(format!("{key}.act"), pb.action.rows());
            r.text(format!("{key}.status"), "valid");
        }
    }
    Ok(())
}
