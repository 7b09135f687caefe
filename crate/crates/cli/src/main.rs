mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::Output;

/// Exact computations with extended associative semigroups and their operads.
#[derive(Parser, Debug)]
#[command(name = "paramassoc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Finite EAS: axioms and classification.
    #[command(subcommand)]
    Eas(EasCmd),
    /// Linear EAS: braid identity, linearization, duals, inverses.
    #[command(subcommand)]
    Leas(LeasCmd),
    /// Free Φ-associative algebras.
    #[command(subcommand)]
    Free(FreeCmd),
    /// The operads As_Φ and As²_Ω.
    #[command(subcommand)]
    Operad(OperadCmd),
    /// Dimension series of As²_Ω.
    #[command(subcommand)]
    Series(SeriesCmd),
    /// Associative products among the *_a.
    #[command(subcommand)]
    Assoc(AssocCmd),
    /// The morphisms Θ and Θ′.
    #[command(subcommand)]
    Morphism(MorphismCmd),
    /// Links with dendriform, diassociative, … algebras.
    #[command(subcommand)]
    Links(LinksCmd),
    /// Shipped EAS and ℓEAS.
    #[command(subcommand)]
    Catalog(CatalogCmd),
}

#[derive(Args, Debug)]
struct Source {
    /// Catalog name or JSON file.
    source: String,
}

#[derive(Subcommand, Debug)]
enum EasCmd {
    Check(Source),
    Classify {
        #[arg(long)]
        size: usize,
        /// Allow the size-3 enumeration.
        #[arg(long)]
        full: bool,
    },
}

#[derive(Subcommand, Debug)]
enum LeasCmd {
    Check(Source),
    Linearize(Source),
    Dual(Source),
    Invert(Source),
}

#[derive(Subcommand, Debug)]
enum FreeCmd {
    AssocCheck {
        source: String,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
}

#[derive(Subcommand, Debug)]
enum OperadCmd {
    Compose {
        source: String,
        #[arg(long, default_value_t = 4)]
        arity_check: usize,
    },
    Confluence(Source),
    Count {
        #[arg(long)]
        omega: usize,
        #[arg(long)]
        n: usize,
        /// Semigroup for →, e.g. `Z/2*`; defaults to `Z/omega`.
        #[arg(long)]
        semigroup: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum SeriesCmd {
    Table {
        #[arg(long)]
        omega_max: u64,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        tsv: bool,
    },
    Poly {
        #[arg(long)]
        n: usize,
    },
    KoszulCheck {
        #[arg(long)]
        omega: u64,
        #[arg(long)]
        order: usize,
    },
}

#[derive(Subcommand, Debug)]
enum AssocCmd {
    Scan(Source),
}

#[derive(Subcommand, Debug)]
enum MorphismCmd {
    Theta(Source),
    /// Semigroup name (`Z/3`, `Z/2xZ/2`) or JSON file with a `table`.
    ThetaPrime(Source),
}

#[derive(Subcommand, Debug)]
enum LinksCmd {
    /// Relation set (`dendriform`, …) or catalog entry.
    Verify { name: String },
}

#[derive(Subcommand, Debug)]
enum CatalogCmd {
    List,
}

fn dispatch(cmd: Command) -> paramassoc::Result<Output> {
    use commands as c;
    match cmd {
        Command::Eas(EasCmd::Check(s)) => c::eas_check(&s.source),
        Command::Eas(EasCmd::Classify { size, full }) => c::eas_classify(size, full),
        Command::Leas(LeasCmd::Check(s)) => c::leas_check(&s.source),
        Command::Leas(LeasCmd::Linearize(s)) => c::leas_linearize(&s.source),
        Command::Leas(LeasCmd::Dual(s)) => c::leas_dual(&s.source),
        Command::Leas(LeasCmd::Invert(s)) => c::leas_invert(&s.source),
        Command::Free(FreeCmd::AssocCheck { source, max_len }) => c::free_assoc_check(&source, max_len),
        Command::Operad(OperadCmd::Compose { source, arity_check }) => c::operad_compose(&source, arity_check),
        Command::Operad(OperadCmd::Confluence(s)) => c::operad_confluence(&s.source),
        Command::Operad(OperadCmd::Count { omega, n, semigroup }) => c::operad_count(omega, n, semigroup.as_deref()),
        Command::Series(SeriesCmd::Table { omega_max, n_max, tsv }) => c::series_table(omega_max, n_max, tsv),
        Command::Series(SeriesCmd::Poly { n }) => c::series_poly(n),
        Command::Series(SeriesCmd::KoszulCheck { omega, order }) => c::series_koszul(omega, order),
        Command::Assoc(AssocCmd::Scan(s)) => c::assoc_scan(&s.source),
        Command::Morphism(MorphismCmd::Theta(s)) => c::morphism_theta(&s.source),
        Command::Morphism(MorphismCmd::ThetaPrime(s)) => c::morphism_theta_prime(&s.source),
        Command::Links(LinksCmd::Verify { name }) => c::links_verify(&name),
        Command::Catalog(CatalogCmd::List) => Ok(c::catalog_list()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.render().to_string();
            println!("{}", commands::error_json(msg.trim_end()));
            return ExitCode::from(2);
        }
    };
    let out = dispatch(cli.command).unwrap_or_else(|e| Output::error(e.to_string()));
    print!("{}", out.render());
    ExitCode::from(out.exit_code())
}
