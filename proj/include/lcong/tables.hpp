// Reference values for Tables I-VIII, used for row-level comparison.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace lcong {

struct TableRowFixture {
  const char* form;
  int n;
  long m;
  const char* lstar_rho;
  const char* p3_rho;
  const char* p3_sigma;
  const char* conductor;
  const char* residue_sigma;
  const char* residue_rho;
  bool p3_rho_printed_zero;  // reference shows 0 for P_3(f,ρ,n) because L*(ρ,n) = 0
};

struct HeaderFixture {
  const char* form;
  int n;
  const char* value;
};

// One row of Tables V-VIII; cols[i] is B_{i+1} or sqrt(B_{i+1}) per BTableSpec, "" when absent.
struct BRowFixture {
  const char* form;
  long m;
  std::array<const char*, 3> cols;
};

struct BTableSpec {
  const char* form;
  const char* name;
  int n_cols;
  std::array<const char*, 3> divisor;  // B_n = A_n / divisor
  std::array<bool, 3> sqrt_col;
};

const std::vector<TableRowFixture>& table_rows();
const std::vector<HeaderFixture>& header_values();
const std::vector<BRowFixture>& b_rows();
const std::vector<BTableSpec>& b_table_specs();

std::optional<TableRowFixture> find_row(const std::string& form, long m, int n);
std::optional<BRowFixture> find_b_row(const std::string& form, long m);
std::optional<BTableSpec> find_b_spec(const std::string& form);
// Largest n present in the row tables for the form.
int table_max_n(const std::string& form);

}  // namespace lcong
