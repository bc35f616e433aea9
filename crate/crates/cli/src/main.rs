mod args;
mod cache;
mod construct;
mod error;
mod param;
mod tables;
mod verify;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use cubesym_core::build_family_capped;
use cubesym_core::io::{family_params, to_edge_list, to_graph6, to_json};

use args::{Cli, Command, ExportArgs, ExportFormat, GenArgs, GraphFormat};
use cache::ResultCache;
use error::{CliError, Result};

fn gen(args: &GenArgs, max_vertices: usize) -> Result<Option<String>> {
    let g = build_family_capped(&args.family.spec()?, max_vertices)?;
    let text = match args.format {
        GraphFormat::Graph6 => to_graph6(&g)?,
        GraphFormat::Edgelist => to_edge_list(&g).trim_end().to_string(),
        GraphFormat::Json => to_json(&g),
    };
    match &args.output {
        Some(path) => {
            fs::write(path, format!("{text}\n")).map_err(CliError::io(path))?;
            Ok(None)
        }
        None => Ok(Some(text)),
    }
}

fn export(args: &ExportArgs, cache: &ResultCache) -> Result<String> {
    let records = cache.records()?;
    match args.format {
        ExportFormat::Json => {
            let outputs: Vec<_> = records.into_iter().map(|r| r.output).collect();
            Ok(serde_json::to_string_pretty(&outputs)?)
        }
        ExportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["family", "params", "parameter", "value", "method", "group_order", "elapsed_ms"])?;
            for r in records {
                let o = r.output;
                let (kind, params) = family_params(&o.family);
                let params: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let value = match (o.value, o.transitivity) {
                    (Some(v), _) => v.to_string(),
                    (None, Some(t)) => serde_json::to_string(&t)?,
                    (None, None) => String::new(),
                };
                w.write_record([
                    kind,
                    params.join(";"),
                    o.parameter,
                    value,
                    o.method.to_string(),
                    o.group_order.to_string(),
                    o.elapsed_ms.to_string(),
                ])?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("CSV of UTF-8 fields").trim_end().to_string())
        }
    }
}

fn run(cli: Cli) -> Result<Option<String>> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| CliError::Usage(format!("--threads: {e}")))?;
    }
    let cache = ResultCache::new(&cli.cache_dir);
    let cache_ref = (!cli.no_cache).then_some(&cache);
    match &cli.command {
        Command::Gen(a) => gen(a, cli.max_vertices),
        Command::Param(a) => param::run(a, cache_ref, cli.max_vertices).map(Some),
        Command::Tables(a) => tables::run(a, cli.max_vertices).map(Some),
        Command::Construct(a) => construct::run(a).map(Some),
        Command::Verify(a) => verify::run(&a.file, cli.max_vertices).map(Some),
        Command::Export(a) => export(a, &cache).map(Some),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(text) => {
            if let Some(text) = text {
                let mut out = std::io::stdout().lock();
                let _ = writeln!(out, "{text}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
