use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use sha2::{Digest, Sha256};

/// First 16 hex digits of the SHA-256 of `bytes`.
pub fn short_hash(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))[..16].to_string()
}

/// Identification line written at the top of every output.
#[derive(Clone, Debug)]
pub struct Header {
    pub config_json: String,
    pub catalog_hash: String,
}

impl Header {
    pub fn line(&self) -> String {
        format!(
            "xi-lab {} config={} catalog={}",
            env!("CARGO_PKG_VERSION"),
            short_hash(self.config_json.as_bytes()),
            self.catalog_hash
        )
    }
}

pub fn sci(x: f64) -> String {
    format!("{x:.16e}")
}

pub struct CsvWriter {
    inner: Box<dyn Write>,
}

impl CsvWriter {
    /// Writes to `path`, or to stdout when `path` is `None`.
    pub fn create(path: Option<&Path>, header: &Header, columns: &[&str]) -> io::Result<Self> {
        let inner: Box<dyn Write> = match path {
            Some(p) => Box::new(BufWriter::new(File::create(p)?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        };
        let mut w = Self { inner };
        writeln!(w.inner, "# {}", header.line())?;
        writeln!(w.inner, "# config {}", header.config_json)?;
        writeln!(w.inner, "{}", columns.join(","))?;
        Ok(w)
    }

    pub fn row(&mut self, fields: &[String]) -> io::Result<()> {
        writeln!(self.inner, "{}", fields.join(","))
    }

    pub fn finish(mut self) -> io::Result<()> {
        self.inner.flush()
    }
}
