use std::io::{Read, Write};

use crate::Error;

pub const CSV_HEADER: [&str; 9] = [
    "n",
    "family",
    "algo",
    "seed",
    "trial",
    "C",
    "M",
    "T",
    "wall_time",
];

/// One benchmark row.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentRecord {
    pub n: u64,
    pub family: String,
    pub algo: String,
    pub seed: u64,
    pub trial: u64,
    /// C
    pub gamma_count: u64,
    /// M
    pub peak_sorted_len: u64,
    /// T
    pub elementary_ops: u64,
    /// Seconds; reported, never asserted on.
    pub wall_time: f64,
}

impl ExperimentRecord {
    fn fields(&self) -> [String; 9] {
        [
            self.n.to_string(),
            self.family.clone(),
            self.algo.clone(),
            self.seed.to_string(),
            self.trial.to_string(),
            self.gamma_count.to_string(),
            self.peak_sorted_len.to_string(),
            self.elementary_ops.to_string(),
            format!("{:.6}", self.wall_time),
        ]
    }
}

pub fn write_csv<W: Write>(out: W, records: &[ExperimentRecord]) -> Result<(), Error> {
    let mut writer = csv::Writer::from_writer(out);
    let csv_err = |e: csv::Error| Error::Format(e.to_string());
    writer.write_record(CSV_HEADER).map_err(csv_err)?;
    for rec in records {
        writer.write_record(rec.fields()).map_err(csv_err)?;
    }
    writer.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<ExperimentRecord>, Error> {
    let mut reader = csv::Reader::from_reader(input);
    let header = reader.headers().map_err(|e| Error::Format(e.to_string()))?;
    if header.iter().ne(CSV_HEADER) {
        return Err(Error::Format(format!(
            "expected header {}, found {}",
            CSV_HEADER.join(","),
            header.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let mut records = Vec::new();
    for (line, row) in reader.records().enumerate() {
        let row = row.map_err(|e| Error::Format(e.to_string()))?;
        let int = |i: usize| -> Result<u64, Error> {
            row[i].parse().map_err(|_| {
                Error::Format(format!(
                    "row {}: column {} is not a count: {:?}",
                    line + 1,
                    CSV_HEADER[i],
                    &row[i]
                ))
            })
        };
        records.push(ExperimentRecord {
            n: int(0)?,
            family: row[1].to_string(),
            algo: row[2].to_string(),
            seed: int(3)?,
            trial: int(4)?,
            gamma_count: int(5)?,
            peak_sorted_len: int(6)?,
            elementary_ops: int(7)?,
            wall_time: row[8].parse().map_err(|_| {
                Error::Format(format!("row {}: bad wall_time {:?}", line + 1, &row[8]))
            })?,
        });
    }
    Ok(records)
}
