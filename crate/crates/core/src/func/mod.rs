//! Symbolic functions with deferred evaluation.
//!
//! A [`FunctionDef`] carries optional hooks. Applying a function consults the
//! eval hook once; when it declines, the application stays inert.

mod builtins;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::expr::{Expr, Kind};
use crate::num::{Number, Precision};
use crate::series::PSeries;

pub use builtins::{cos, exp, factorial, gamma, log, psi, sin, zeta};

/// Exact rewrite at construction; `Ok(None)` declines.
pub type EvalHook = Arc<dyn Fn(&[Expr]) -> Result<Option<Expr>> + Send + Sync>;
/// Numeric value for numeric arguments; `Ok(None)` declines.
pub type EvalfHook = Arc<dyn Fn(&[Number], Precision) -> Result<Option<Number>> + Send + Sync>;
/// Partial derivative with respect to argument `index`.
pub type DerivHook = Arc<dyn Fn(&[Expr], usize) -> Result<Expr> + Send + Sync>;
/// Series in `var` around 0 to order `n` for arguments already shifted to
/// the expansion point; `Ok(None)` falls back to Taylor expansion.
pub type SeriesHook = Arc<dyn Fn(&[Expr], &Expr, i64) -> Result<Option<PSeries>> + Send + Sync>;

pub struct FunctionDef {
    serial: u32,
    name: String,
    arity: usize,
    eval: Option<EvalHook>,
    evalf: Option<EvalfHook>,
    derivative: Option<DerivHook>,
    series: Option<SeriesHook>,
}

impl FunctionDef {
    /// Starts a definition; finish with [`FunctionBuilder::register`].
    pub fn builder(name: &str, arity: usize) -> FunctionBuilder {
        FunctionBuilder {
            name: name.to_string(),
            arity,
            eval: None,
            evalf: None,
            derivative: None,
            series: None,
        }
    }

    pub fn serial(&self) -> u32 {
        self.serial
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub(crate) fn series_hook(&self) -> Option<&SeriesHook> {
        self.series.as_ref()
    }

    /// Partial derivative with respect to argument `index`.
    pub fn derivative(&self, args: &[Expr], index: usize) -> Result<Expr> {
        match &self.derivative {
            Some(d) => d(args, index),
            None => Err(Error::UnevaluatedDerivative(self.name.clone())),
        }
    }
}

impl fmt::Debug for FunctionDef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FunctionDef({}/{})", self.name, self.arity)
    }
}

pub struct FunctionBuilder {
    name: String,
    arity: usize,
    eval: Option<EvalHook>,
    evalf: Option<EvalfHook>,
    derivative: Option<DerivHook>,
    series: Option<SeriesHook>,
}

impl FunctionBuilder {
    pub fn eval(mut self, f: impl Fn(&[Expr]) -> Result<Option<Expr>> + Send + Sync + 'static) -> Self {
        self.eval = Some(Arc::new(f));
        self
    }

    pub fn evalf(mut self, f: impl Fn(&[Number], Precision) -> Result<Option<Number>> + Send + Sync + 'static) -> Self {
        self.evalf = Some(Arc::new(f));
        self
    }

    pub fn derivative(mut self, f: impl Fn(&[Expr], usize) -> Result<Expr> + Send + Sync + 'static) -> Self {
        self.derivative = Some(Arc::new(f));
        self
    }

    pub fn series(mut self, f: impl Fn(&[Expr], &Expr, i64) -> Result<Option<PSeries>> + Send + Sync + 'static) -> Self {
        self.series = Some(Arc::new(f));
        self
    }

    /// Adds the function to the global registry.
    pub fn register(self) -> Result<Arc<FunctionDef>> {
        registry_register(self)
    }
}

#[derive(Default)]
struct Registry {
    by_name: HashMap<String, Arc<FunctionDef>>,
    count: u32,
}

static REGISTRY: OnceLock<RwLock<Registry>> = OnceLock::new();

fn registry() -> &'static RwLock<Registry> {
    REGISTRY.get_or_init(|| {
        let mut reg = Registry::default();
        for b in builtins::definitions() {
            insert(&mut reg, b).expect("builtin names are distinct");
        }
        RwLock::new(reg)
    })
}

fn insert(reg: &mut Registry, b: FunctionBuilder) -> Result<Arc<FunctionDef>> {
    if b.arity == 0 {
        return Err(Error::Registration(format!("{}: arity must be positive", b.name)));
    }
    if reg.by_name.contains_key(&b.name) {
        return Err(Error::Registration(format!("{} is already registered", b.name)));
    }
    let def = Arc::new(FunctionDef {
        serial: reg.count,
        name: b.name.clone(),
        arity: b.arity,
        eval: b.eval,
        evalf: b.evalf,
        derivative: b.derivative,
        series: b.series,
    });
    reg.count += 1;
    reg.by_name.insert(b.name, def.clone());
    Ok(def)
}

fn registry_register(b: FunctionBuilder) -> Result<Arc<FunctionDef>> {
    let mut reg = registry().write().unwrap_or_else(|e| e.into_inner());
    insert(&mut reg, b)
}

/// Registered function named `name`.
pub fn lookup(name: &str) -> Option<Arc<FunctionDef>> {
    registry().read().unwrap_or_else(|e| e.into_inner()).by_name.get(name).cloned()
}

pub(crate) fn builtin(name: &str) -> Arc<FunctionDef> {
    lookup(name).expect("builtin function")
}

/// An application `f(args)` that its eval hook declined to rewrite.
#[derive(Clone, Debug)]
pub struct FunctionApp {
    def: Arc<FunctionDef>,
    args: Vec<Expr>,
}

impl FunctionApp {
    pub fn def(&self) -> &Arc<FunctionDef> {
        &self.def
    }

    pub fn args(&self) -> &[Expr] {
        &self.args
    }
}

/// Applies `def` to `args`, consulting its eval hook and, for float
/// arguments, its numeric hook.
pub fn apply(def: &Arc<FunctionDef>, args: Vec<Expr>) -> Result<Expr> {
    if args.len() != def.arity {
        return Err(Error::Domain(format!("{} takes {} argument(s), got {}", def.name, def.arity, args.len())));
    }
    if let Some(ev) = &def.eval {
        if let Some(e) = ev(&args)? {
            return Ok(e);
        }
    }
    let nums: Option<Vec<Number>> = args.iter().map(|a| a.as_number().cloned()).collect();
    if let (Some(nums), Some(evf)) = (nums, &def.evalf) {
        if nums.iter().any(|n| n.is_float()) {
            let prec = nums.iter().filter_map(|n| n.float_precision()).min().unwrap();
            if let Some(v) = evf(&nums, prec)? {
                return Ok(Expr::num(v));
            }
        }
    }
    Ok(Expr::from_kind(Kind::Function(FunctionApp { def: def.clone(), args })))
}

/// Applies the registered function `name`.
pub fn apply_named(name: &str, args: Vec<Expr>) -> Result<Expr> {
    let def = lookup(name).ok_or_else(|| Error::Domain(format!("unknown function {name}")))?;
    apply(&def, args)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{diff, evalf, symbol};

    #[test]
    fn custom_function_is_inert() {
        let f = FunctionDef::builder("inert_f", 1).register().unwrap();
        let x = symbol("x");
        let e = apply(&f, vec![x.clone()]).unwrap();
        assert_eq!(e.to_string(), "inert_f(x)");
        assert_eq!(evalf(&apply(&f, vec![Expr::int(2)]).unwrap(), Precision::DEFAULT).unwrap().to_string(), "inert_f(2.0)");
        assert!(matches!(diff(&e, &x, 1), Err(Error::UnevaluatedDerivative(_))));
        assert!(apply(&f, vec![x.clone(), x]).is_err());
    }

    #[test]
    fn duplicate_registration_fails() {
        assert!(matches!(FunctionDef::builder("sin", 1).register(), Err(Error::Registration(_))));
        FunctionDef::builder("dup_g", 2).register().unwrap();
        assert!(FunctionDef::builder("dup_g", 2).register().is_err());
    }

    #[test]
    fn concurrent_registration() {
        let handles: Vec<_> = (0..8)
            .map(|i| std::thread::spawn(move || FunctionDef::builder(&format!("par_{i}"), 1).register().unwrap().serial()))
            .collect();
        let mut serials: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        serials.sort();
        serials.dedup();
        assert_eq!(serials.len(), 8);
    }
}
