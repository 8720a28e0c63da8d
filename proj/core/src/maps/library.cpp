#include "painleve/maps/library.hpp"

#include <map>
#include <mutex>

#include "painleve/error.hpp"
#include "painleve/exactalg/infix.hpp"

namespace painleve {

namespace {

using Img = std::vector<std::pair<std::string, std::string>>;

BirationalMap gen(const PhaseSpace& s, std::string name, const Img& images) {
  return BirationalMap::from_strings(std::move(name), s, s, images);
}

BirationalMap chart(const PhaseSpace& s, std::string name, const Img& images) {
  PhaseSpace t = s;
  t.name = s.name + "/" + name;
  return BirationalMap::from_strings(std::move(name), s, t, images);
}

struct SystemMaps {
  std::vector<BirationalMap> gens;
  std::vector<BirationalMap> charts;
  std::optional<BirationalMap> phi;
};

SystemMaps build(SystemId id) {
  PhaseSpace s = space_of(id);
  SystemMaps m;
  switch (id) {
    case SystemId::PVI_D4:
      m.gens = {
          gen(s, "w0", {{"y", "y-a0/(x-t)"}, {"a0", "-a0"}, {"a2", "a2+a0"}}),
          gen(s, "w1", {{"a1", "-a1"}, {"a2", "a2+a1"}}),
          gen(s, "w2",
              {{"x", "x+a2/y"}, {"a0", "a0+a2"}, {"a1", "a1+a2"}, {"a2", "-a2"}, {"a3", "a3+a2"}, {"a4", "a4+a2"}}),
          gen(s, "w3", {{"y", "y-a3/(x-1)"}, {"a2", "a2+a3"}, {"a3", "-a3"}}),
          gen(s, "w4", {{"y", "y-a4/x"}, {"a2", "a2+a4"}, {"a4", "-a4"}}),
      };
      break;
    case SystemId::B3:
      m.gens = {
          gen(s, "s0", {{"y", "y-a0/(x-1)"}, {"a0", "-a0"}, {"a2", "a2+a0"}}),
          gen(s, "s1", {{"a1", "-a1"}, {"a2", "a2+a1"}}),
          gen(s, "s2", {{"x", "x+a2/y"}, {"a0", "a0+a2"}, {"a1", "a1+a2"}, {"a2", "-a2"}, {"a3", "a3+a2"}}),
          gen(s, "s3", {{"y", "y-2*a3/x+t/x^2"}, {"t", "-t"}, {"a2", "a2+2*a3"}, {"a3", "-a3"}}),
          gen(s, "pi", {{"x", "x/(x-1)"}, {"y", "-(x-1)*((x-1)*y+a2)"}, {"t", "-t"}, {"a0", "a1"}, {"a1", "a0"}}),
      };
      m.charts = {
          chart(s, "r0", {{"x", "-((x-1)*y-a0)*y"}, {"y", "1/y"}}),
          chart(s, "r1", {{"x", "1/x"}, {"y", "-(y*x+a1+a2)*x"}}),
          chart(s, "r2", {{"x", "1/x"}, {"y", "-(y*x+a2)*x"}}),
          chart(s, "r3", {{"y", "y-2*a3/x+t/x^2"}}),
      };
      m.phi = gen(s, "phi",
                  {{"x", "-t/(x*(x*y+a2))"},
                   {"y", "-x*(x*y+a2)*(-x*y+x^2*y-a0-a2+a2*x)/t"},
                   {"a0", "a2+2*a3"},
                   {"a1", "a2"},
                   {"a2", "a0"},
                   {"a3", "(a1-a0)/2"}});
      break;
    case SystemId::G2:
      m.gens = {
          gen(s, "s0", {{"a0", "-a0"}, {"a1", "a1+a0"}}),
          gen(s, "s1", {{"x", "x+a1/y"}, {"a0", "a0+a1"}, {"a1", "-a1"}, {"a2", "a2+a1"}}),
          gen(s, "s2",
              {{"x", "i*x"},
               {"y", "-i*(y-3*a2/x+t/x^2+1/(2*x^3))"},
               {"t", "-i*t"},
               {"a1", "a1+3*a2"},
               {"a2", "-a2"}}),
      };
      m.charts = {
          chart(s, "r0", {{"x", "1/x"}, {"y", "-(y*x+a0+a1)*x"}}),
          chart(s, "r1", {{"x", "1/x"}, {"y", "-(y*x+a1)*x"}}),
          chart(s, "r2", {{"y", "y-3*a2/x+t/x^2+1/(2*x^3)"}}),
      };
      m.phi = gen(
          s, "phi",
          {{"x", "1/(2*x*(x*y+a1))"},
           {"y", "-2*x*(x*y+a1)*(x*y+2*t*x^2*y+2*x^4*y^2+4*a1*x^3*y+2*a1^2*x^2+2*a1*t*x+2*a1+3*a2)"},
           {"a0", "a1"},
           {"a1", "a1+3*a2"},
           {"a2", "(a0-a1-3*a2)/3"}});
      break;
    case SystemId::D32:
      m.gens = {
          gen(s, "s0",
              {{"x", "-x"}, {"y", "-y+2*a0/x-1/x^2"}, {"t", "-t"}, {"a0", "-a0"}, {"a1", "a1+2*a0"}}),
          gen(s, "s1", {{"x", "x+a1/y"}, {"a0", "a0+a1"}, {"a1", "-a1"}, {"a2", "a2+a1"}}),
          gen(s, "s2", {{"y", "y-t"}, {"t", "-t"}, {"a1", "a1+2*a2"}, {"a2", "-a2"}}),
          gen(s, "pi", {{"x", "1/(t*x)"}, {"y", "-t*x*(y*x+a1)"}, {"a0", "a2"}, {"a2", "a0"}}),
      };
      m.charts = {
          chart(s, "r0", {{"y", "y-2*a0/x+1/x^2"}}),
          chart(s, "r1", {{"x", "1/x"}, {"y", "-(y*x+a1)*x"}}),
          chart(s, "r2", {{"x", "1/x"}, {"y", "-((y-t)*x+a1+2*a2)*x"}}),
      };
      break;
    case SystemId::A22:
      m.gens = {
          gen(s, "s0", {{"x", "x+a0/y"}, {"a0", "-a0"}, {"a1", "a1+4*a0"}}),
          gen(s, "s1", {{"x", "-x"}, {"y", "-y+a1/x-t/x^2-2/x^4"}, {"a0", "a0+a1"}, {"a1", "-a1"}}),
      };
      m.charts = {
          chart(s, "r0", {{"x", "1/x"}, {"y", "-(y*x+a0)*x"}}),
          chart(s, "r1", {{"y", "y-a1/x+t/x^2+2/x^4"}}),
      };
      break;
    case SystemId::A3:
      m.gens = {
          gen(s, "S0", {{"X", "X+b0/(Y+T)"}, {"b0", "-b0"}, {"b1", "b1+b0"}, {"b3", "b3+b0"}}),
          gen(s, "S1", {{"Y", "Y-b1/X"}, {"b0", "b0+b1"}, {"b1", "-b1"}, {"b2", "b2+b1"}}),
          gen(s, "S2", {{"X", "X+b2/Y"}, {"b1", "b1+b2"}, {"b2", "-b2"}, {"b3", "b3+b2"}}),
          gen(s, "S3", {{"Y", "Y-b3/(X-1)"}, {"b0", "b0+b3"}, {"b2", "b2+b3"}, {"b3", "-b3"}}),
          gen(s, "S4", {{"Y", "Y+T"}, {"T", "-T"}, {"b0", "b2"}, {"b2", "b0"}}),
          gen(s, "S5", {{"X", "1-X"}, {"Y", "-Y"}, {"T", "-T"}, {"b1", "b3"}, {"b3", "b1"}}),
          gen(s, "pi", {{"X", "-Y/T"}, {"Y", "(X-1)*T"}, {"b0", "b1"}, {"b1", "b2"}, {"b2", "b3"}, {"b3", "b0"}}),
      };
      break;
    case SystemId::A2:
      // S0 moves X and Y together, so the triangular solver cannot invert
      // it; it is an involution and serves as its own inverse.
      m.gens = {
          gen(s, "S0",
              {{"X", "X+2*b0/(2*Y-X-2*T)"},
               {"Y", "Y+b0/(2*Y-X-2*T)"},
               {"b0", "-b0"},
               {"b1", "b1+b0"},
               {"b2", "b2+b0"}}),
          gen(s, "S1", {{"Y", "Y-b1/X"}, {"b0", "b0+b1"}, {"b1", "-b1"}, {"b2", "b2+b1"}}),
          gen(s, "S2", {{"X", "X+b2/Y"}, {"b0", "b0+b2"}, {"b1", "b1+b2"}, {"b2", "-b2"}}),
          gen(s, "S3", {{"X", "-i*X"}, {"Y", "-i*(X-2*Y+2*T)/2"}, {"T", "-i*T"}, {"b0", "b2"}, {"b2", "b0"}}),
          gen(s, "pi", {{"X", "-2*Y"}, {"Y", "(2*T+X-2*Y)/2"}, {"b0", "b1"}, {"b1", "b2"}, {"b2", "b0"}}),
      };
      break;
    case SystemId::C2:
      m.gens = {
          gen(s, "S0", {{"X", "X+b0/Y"}, {"b0", "-b0"}, {"b1", "b1+b0"}}),
          gen(s, "S1",
              {{"Y", "Y-2*b1/X+T/X^2"}, {"T", "-T"}, {"b0", "b0+2*b1"}, {"b1", "-b1"}, {"b2", "b2+2*b1"}}),
          gen(s, "S2", {{"X", "X+b2/(Y-1)"}, {"b1", "b1+b2"}, {"b2", "-b2"}}),
          gen(s, "S3", {{"X", "-X"}, {"Y", "1-Y"}, {"T", "-T"}, {"b0", "b2"}, {"b2", "b0"}}),
      };
      break;
    case SystemId::A1:
      m.gens = {
          gen(s, "S1", {{"X", "X+b1/Y"}, {"b0", "b0+2*b1"}, {"b1", "-b1"}}),
          gen(s, "pi", {{"X", "-X"}, {"Y", "T+2*X^2-Y"}, {"b0", "b1"}, {"b1", "b0"}}),
      };
      break;
    case SystemId::B5:
      m.gens = {
          gen(s, "s0", {{"y", "y-a0/(x-1)"}, {"a0", "-a0"}, {"a2", "a2+a0"}}),
          gen(s, "s1", {{"a1", "-a1"}, {"a2", "a2+a1"}}),
          gen(s, "s2", {{"x", "x+a2/y"}, {"a0", "a0+a2"}, {"a1", "a1+a2"}, {"a2", "-a2"}, {"a3", "a3+a2"}}),
          gen(s, "s3",
              {{"y", "y-a3/(x-z)"}, {"w", "w+a3/(x-z)"}, {"a2", "a2+a3"}, {"a3", "-a3"}, {"a4", "a4+a3"}}),
          gen(s, "s4", {{"z", "z+a4/w"}, {"a3", "a3+a4"}, {"a4", "-a4"}, {"a5", "a5+a4"}}),
          gen(s, "s5", {{"w", "w-2*a5/z+t/z^2"}, {"t", "-t"}, {"a4", "a4+2*a5"}, {"a5", "-a5"}}),
          gen(s, "pi",
              {{"x", "x/(x-1)"},
               {"y", "-(x-1)*((x-1)*y+a2)"},
               {"z", "z/(z-1)"},
               {"w", "-(z-1)*((z-1)*w+a4)"},
               {"t", "-t"},
               {"a0", "a1"},
               {"a1", "a0"}}),
      };
      m.charts = {
          chart(s, "r0", {{"x", "-((x-1)*y-a0)*y"}, {"y", "1/y"}}),
          chart(s, "r1", {{"x", "1/x"}, {"y", "-(y*x+a1+a2)*x"}}),
          chart(s, "r2", {{"x", "1/x"}, {"y", "-(y*x+a2)*x"}}),
          chart(s, "r3", {{"x", "-((x-z)*y-a3)*y"}, {"y", "1/y"}, {"w", "w+y"}}),
          chart(s, "r4", {{"z", "1/z"}, {"w", "-(w*z+a4)*z"}}),
          chart(s, "r5", {{"w", "w-2*a5/z+t/z^2"}}),
      };
      // The stated w-image has (x - t) where (x - 1) is needed; only the
      // latter is symplectic and agrees with the conjugated pi of D5.
      m.phi = gen(s, "phi",
                  {{"x", "t/(t+z^2*w+a4*z)"},
                   {"y", "(t+z^2*w+a4*z)*(-t*x+t*z-x*z^2*w+z^3*w-(a3+a4)*x*z+a4*z^2)/(t*x*z)"},
                   {"z", "t/(t+x^2*y+z^2*w+a2*x+a4*z)"},
                   {"w", "(t+x^2*y+z^2*w+a2*x+a4*z)*((x-1)*(t+x^2*y+z^2*w+a4*z)-(a0+a2)*x+a2*x^2)/(t*x)"},
                   {"t", "-t"},
                   {"a0", "a4"},
                   {"a1", "a4+2*a5"},
                   {"a2", "a3"},
                   {"a3", "a2"},
                   {"a4", "a0"},
                   {"a5", "(a1-a0)/2"}});
      break;
    case SystemId::D5:
      m.gens = {
          gen(s, "S0", {{"X", "X+b0/(Y+T)"}, {"b0", "-b0"}, {"b2", "b2+b0"}}),
          gen(s, "S1", {{"X", "X+b1/Y"}, {"b1", "-b1"}, {"b2", "b2+b1"}}),
          gen(s, "S2",
              {{"Y", "Y-b2/(X-Z)"},
               {"W", "W+b2/(X-Z)"},
               {"b0", "b0+b2"},
               {"b1", "b1+b2"},
               {"b2", "-b2"},
               {"b3", "b3+b2"}}),
          gen(s, "S3", {{"Z", "Z+b3/W"}, {"b2", "b2+b3"}, {"b3", "-b3"}, {"b4", "b4+b3"}, {"b5", "b5+b3"}}),
          gen(s, "S4", {{"W", "W-b4/(Z-1)"}, {"b3", "b3+b4"}, {"b4", "-b4"}}),
          gen(s, "S5", {{"W", "W-b5/Z"}, {"b3", "b3+b5"}, {"b5", "-b5"}}),
          gen(s, "S6", {{"Y", "Y+T"}, {"T", "-T"}, {"b0", "b1"}, {"b1", "b0"}}),
          gen(s, "S7", {{"X", "1-X"}, {"Y", "-Y"}, {"Z", "1-Z"}, {"W", "-W"}, {"T", "-T"}, {"b4", "b5"}, {"b5", "b4"}}),
          gen(s, "S8",
              {{"X", "1-X"}, {"Y", "-Y-T"}, {"Z", "1-Z"}, {"W", "-W"}, {"b0", "b1"}, {"b1", "b0"}, {"b4", "b5"}, {"b5", "b4"}}),
          gen(s, "pi",
              {{"X", "(Y+W+T)/T"},
               {"Y", "-T*(Z-1)"},
               {"Z", "(Y+T)/T"},
               {"W", "-T*(X-Z)"},
               {"T", "-T"},
               {"b0", "b5"},
               {"b1", "b4"},
               {"b2", "b3"},
               {"b3", "b2"},
               {"b4", "b1"},
               {"b5", "b0"}}),
      };
      break;
    case SystemId::D52:
      m.gens = {
          gen(s, "s0", {{"y", "y-t"}, {"t", "-t"}, {"a0", "-a0"}, {"a1", "a1+2*a0"}}),
          gen(s, "s1", {{"x", "x+a1/y"}, {"a0", "a0+a1"}, {"a1", "-a1"}, {"a2", "a2+a1"}}),
          gen(s, "s2",
              {{"y", "y-a2/(x-z)"}, {"w", "w+a2/(x-z)"}, {"a1", "a1+a2"}, {"a2", "-a2"}, {"a3", "a3+a2"}}),
          gen(s, "s3", {{"z", "z+a3/w"}, {"a2", "a2+a3"}, {"a3", "-a3"}, {"a4", "a4+a3"}}),
          gen(s, "s4",
              {{"x", "-x"},
               {"y", "-y"},
               {"z", "-z"},
               {"w", "-w+2*a4/z-1/z^2"},
               {"t", "-t"},
               {"a3", "a3+2*a4"},
               {"a4", "-a4"}}),
          gen(s, "pi",
              {{"x", "1/(t*z)"},
               {"y", "-t*(z*w+a3)*z"},
               {"z", "1/(t*x)"},
               {"w", "-t*(x*y+a1)*x"},
               {"a0", "a4"},
               {"a1", "a3"},
               {"a3", "a1"},
               {"a4", "a0"}}),
      };
      m.charts = {
          chart(s, "r0", {{"x", "1/x"}, {"y", "-((y-t)*x+2*a0+a1)*x"}}),
          chart(s, "r1", {{"x", "1/x"}, {"y", "-(y*x+a1)*x"}}),
          chart(s, "r2", {{"x", "-((x-z)*y-a2)*y"}, {"y", "1/y"}, {"w", "w+y"}}),
          chart(s, "r3", {{"z", "1/z"}, {"w", "-(w*z+a3)*z"}}),
          chart(s, "r4", {{"w", "w-2*a4/z+1/z^2"}}),
      };
      break;
    case SystemId::B4:
      m.gens = {
          gen(s, "S0", {{"X", "X+b0/(Y-1)"}, {"b0", "-b0"}, {"b2", "b2+b0"}}),
          gen(s, "S1", {{"X", "X+b1/Y"}, {"b1", "-b1"}, {"b2", "b2+b1"}}),
          gen(s, "S2",
              {{"Y", "Y-b2/(X-Z)"},
               {"W", "W+b2/(X-Z)"},
               {"b0", "b0+b2"},
               {"b1", "b1+b2"},
               {"b2", "-b2"},
               {"b3", "b3+b2"}}),
          gen(s, "S3", {{"Z", "Z+b3/W"}, {"b2", "b2+b3"}, {"b3", "-b3"}, {"b4", "b4+b3"}}),
          gen(s, "S4", {{"W", "W-2*b4/Z+T/Z^2"}, {"T", "-T"}, {"b3", "b3+2*b4"}, {"b4", "-b4"}}),
          gen(s, "S5", {{"X", "-X"}, {"Y", "1-Y"}, {"Z", "-Z"}, {"W", "-W"}, {"T", "-T"}, {"b0", "b1"}, {"b1", "b0"}}),
          gen(s, "S6",
              {{"X", "T/Z"},
               {"Y", "-(Z*W+b3)*Z/T"},
               {"Z", "T/X"},
               {"W", "-(X*Y+b1)*X/T"},
               {"b0", "b3+2*b4"},
               {"b1", "b3"},
               {"b3", "b1"},
               {"b4", "(b0-b1)/2"}}),
      };
      break;
  }
  if (id == SystemId::A2) m.gens[0] = m.gens[0].with_inverse(m.gens[0]);
  return m;
}

const SystemMaps& maps_for(SystemId id) {
  static std::map<SystemId, SystemMaps> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, build(id)).first;
  return it->second;
}

std::vector<Relation> relations_from(const std::vector<std::string>& labels) {
  std::vector<Relation> out;
  for (const auto& l : labels) out.push_back({l, Word::parse(l)});
  return out;
}

std::vector<std::string> squares(const std::string& prefix, int n) {
  std::vector<std::string> out;
  for (int k = 0; k < n; ++k) out.push_back(prefix + std::to_string(k) + "^2");
  return out;
}

// g S_k g^-1 = S_perm[k] for k = 0..n-1.
std::vector<std::string> conjugations(const std::string& g, const std::vector<int>& perm) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < perm.size(); ++k)
    out.push_back(g + " S" + std::to_string(k) + " " + g + "^-1 S" + std::to_string(perm[k]) + "^-1");
  return out;
}

std::string dynkin_of(SystemId id) {
  switch (id) {
    case SystemId::PVI_D4: return "D4^(1)";
    case SystemId::B3: return "B3^(1)";
    case SystemId::G2: return "G2^(1)";
    case SystemId::D32: return "D3^(2)";
    case SystemId::A22: return "A2^(2)";
    case SystemId::A3: return "A3^(1)";
    case SystemId::A2: return "A2^(1)";
    case SystemId::C2: return "C2^(1)";
    case SystemId::A1: return "A1^(1)";
    case SystemId::B5: return "B5^(1)";
    case SystemId::D5: return "D5^(1)";
    case SystemId::D52: return "D5^(2)";
    case SystemId::B4: return "B4^(1)";
  }
  return "";
}

PhaseSpace problem_space(std::string name, int nparams) {
  PhaseSpace s;
  s.name = std::move(name);
  for (const char* v : {"x", "y", "z", "w"}) s.phase.push_back(Var::of(v));
  s.time = Var::of("t");
  for (int k = 0; k < nparams; ++k) s.params.push_back(Var::of("a" + std::to_string(k)));
  return s;
}

// New coordinates for a degeneration into `target`: capitals for the phase
// variables and the time, A_i for the parameters, plus eps.
PhaseSpace new_space(SystemId target) {
  const HamiltonianSystem& sys = get_system(target);
  Bindings rename;
  PhaseSpace s;
  s.name = to_string(target) + "[eps]";
  auto upper = [](Var v) {
    std::string n = v.name();
    if (n[0] == 'a') return Var::of("A" + n.substr(1));
    n[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(n[0])));
    return Var::of(n);
  };
  for (Var v : sys.phase_vars) s.phase.push_back(upper(v));
  s.time = upper(sys.time_var);
  for (Var v : sys.params) s.params.push_back(upper(v));
  s.extra.push_back(Var::of("eps"));
  ParamConstraint c = sys.constraint;
  for (auto& [v, k] : c.terms) v = upper(v);
  c.eliminated = upper(c.eliminated);
  s.constraint = c;
  return s;
}

std::vector<Coincidence> build_coincidences() {
  std::vector<Coincidence> out;
  auto make = [&](std::string name, SystemId src, SystemId dst, const Img& images,
                  const std::vector<std::pair<std::string, std::string>>& induced) {
    Coincidence c{name, src, dst, BirationalMap::from_strings(name, space_of(src), space_of(dst), images), {}};
    for (const auto& [g, w] : induced) c.induced.emplace_back(g, Word::parse(w));
    out.push_back(std::move(c));
  };
  make("B3toA3", SystemId::B3, SystemId::A3,
       {{"X", "1/x"}, {"Y", "-x*(x*y+a2)"}, {"T", "-t"}, {"b0", "a2+2*a3"}, {"b1", "a1"}, {"b2", "a2"}, {"b3", "a0"}},
       {{"S0", "s3 s2 s3"}, {"S1", "s1"}, {"S2", "s2"}, {"S3", "s0"}, {"S4", "s3"}, {"S5", "pi"}});
  make("G2toA2", SystemId::G2, SystemId::A2,
       {{"X", "1/x"}, {"Y", "-x*(x*y+a1)"}, {"T", "t"}, {"b0", "a1+3*a2"}, {"b1", "a0"}, {"b2", "a1"}},
       {{"S0", "s2 s1 s2"}, {"S1", "s0"}, {"S2", "s1"}, {"S3", "s2"}});
  {
    // Stated with the old coordinates in terms of the new ones.
    BirationalMap back = BirationalMap::from_strings(
        "C2toD32", space_of(SystemId::C2), space_of(SystemId::D32),
        {{"x", "1/X"}, {"y", "-X*(Y*X+b0)"}, {"t", "T"}, {"a0", "(b2-b0)/2"}, {"a1", "b0"}, {"a2", "b1"}});
    BirationalMap fwd = inverse(back).renamed("D32toC2").with_inverse(back);
    Coincidence c{"D32toC2", SystemId::D32, SystemId::C2, fwd, {}};
    for (const auto& [g, w] : std::vector<std::pair<std::string, std::string>>{
             {"S0", "s1"}, {"S1", "s2"}, {"S2", "s0 s1 s0"}, {"S3", "s0"}})
      c.induced.emplace_back(g, Word::parse(w));
    out.push_back(std::move(c));
  }
  make("A22toA1", SystemId::A22, SystemId::A1,
       {{"X", "1/x"}, {"Y", "-x*(x*y+a0)"}, {"T", "t"}, {"b0", "a0+a1"}, {"b1", "a0"}},
       {{"S1", "s0"}, {"pi", "s1"}});
  make("B5toD5", SystemId::B5, SystemId::D5,
       {{"X", "1/z"},
        {"Y", "-z*(z*w+a4)"},
        {"Z", "1/x"},
        {"W", "-x*(x*y+a2)"},
        {"T", "-t"},
        {"b0", "a4+2*a5"},
        {"b1", "a4"},
        {"b2", "a3"},
        {"b3", "a2"},
        {"b4", "a0"},
        {"b5", "a1"}},
       {{"S0", "s5 s4 s5"},
        {"S1", "s4"},
        {"S2", "s3"},
        {"S3", "s2"},
        {"S4", "s0"},
        {"S5", "s1"},
        {"S6", "s5"},
        {"S7", "pi"},
        {"S8", "pi s5"}});
  make("D52toB4", SystemId::D52, SystemId::B4,
       {{"X", "1/z"},
        {"Y", "-z*(z*w+a3)"},
        {"Z", "1/x"},
        {"W", "-x*(x*y+a1)"},
        {"T", "t"},
        {"b0", "a3+2*a4"},
        {"b1", "a3"},
        {"b2", "a2"},
        {"b3", "a1"},
        {"b4", "a0"}},
       {{"S0", "s4 s3 s4"}, {"S1", "s3"}, {"S2", "s2"}, {"S3", "s1"}, {"S4", "s0"}, {"S5", "s4"}, {"S6", "pi"}});
  return out;
}

SubgroupGenerator sub(std::string name, std::string word, std::string limit, Scalar zeta, Img expected = {},
                      std::string u_base = "", mpq_class u_exp = 0, Img limit_expected = {}) {
  return SubgroupGenerator{std::move(name),     Word::parse(word), std::move(limit),          std::move(zeta),
                           std::move(expected), std::move(u_base), u_exp, std::move(limit_expected)};
}

std::vector<Degeneration> build_degenerations() {
  std::vector<Degeneration> out;
  Var eps = Var::of("eps");
  auto make = [&](std::string name, SystemId src, SystemId dst, const Img& images, int k, std::string value,
                  std::vector<SubgroupGenerator> subgroup) {
    PhaseSpace ns = new_space(dst);
    Degeneration d{name, src, dst, ns, BirationalMap::from_strings(name, ns, space_of(src), images), eps, k,
                   parse_infix(value), std::move(subgroup)};
    out.push_back(std::move(d));
  };
  Scalar one(1), i = Scalar::imag_unit();

  make("D4toB3", SystemId::PVI_D4, SystemId::B3,
       {{"a0", "1/eps"},
        {"a1", "A0"},
        {"a2", "A2"},
        {"a3", "(2*A3*eps-1)/eps"},
        {"a4", "A1"},
        {"t", "1-eps*T"},
        {"x", "1/(1-X)"},
        {"y", "X^2*Y-2*X*Y+A2*X+Y-A2"}},
       1, "1/a0",
       {sub("S0", "w1", "s0", one,
            {{"A0", "-A0"}, {"A1", "A1"}, {"A2", "A2+A0"}, {"A3", "A3"}, {"eps", "eps"},
             {"X", "X"}, {"Y", "Y-A0/(X-1)"}, {"T", "T"}}),
        sub("S1", "w4", "s1", one,
            {{"A0", "A0"}, {"A1", "-A1"}, {"A2", "A2+A1"}, {"A3", "A3"}, {"eps", "eps"},
             {"X", "X"}, {"Y", "Y"}, {"T", "T"}}),
        sub("S2", "w2", "s2", one,
            {{"A0", "A0+A2"}, {"A1", "A1+A2"}, {"A2", "-A2"}, {"A3", "A3+A2"}, {"eps", "eps/(1+eps*A2)"},
             {"X", "X+A2/Y"}, {"Y", "Y"}, {"T", "T*(1+eps*A2)"}}),
        sub("S3", "w0 w3", "s3", one,
            {{"A0", "A0"}, {"A1", "A1"}, {"A2", "A2+2*A3"}, {"A3", "-A3"}, {"eps", "-eps"},
             {"X", "X"},
             {"Y", "((eps*T-1)*X^2*Y-eps*T*X*Y-2*A3*(eps*T-1)*X+(2*eps*A3-1)*T)/(((eps*T-1)*X-eps*T)*X)"},
             {"T", "-T"}})});

  make("B3toG2", SystemId::B3, SystemId::G2,
       {{"a0", "-1/(2*eps^2)"},
        {"a1", "A0"},
        {"a2", "A1"},
        {"a3", "(1+6*A2*eps^2)/(4*eps^2)"},
        {"t", "(-1-2*eps*T)/(2*eps^2)"},
        {"x", "(eps-X)/eps"},
        {"y", "-eps*Y"}},
       2, "-1/(2*a0)",
       {sub("S0", "s1", "s0", one,
            {{"A0", "-A0"}, {"A1", "A1+A0"}, {"A2", "A2"}, {"eps", "eps"}, {"T", "T"}, {"X", "X"}, {"Y", "Y"}}),
        sub("S1", "s2", "s1", one,
            {{"A0", "A0+A1"}, {"A1", "-A1"}, {"A2", "A2+A1"}, {"eps", "eps*u"}, {"T", "(T+A1*eps)*u"}},
            "1-2*A1*eps^2", mpq_class(-1, 2), {{"X", "X+A1/Y"}, {"Y", "Y"}}),
        sub("S2", "s0 s3", "s2", i,
            {{"A0", "A0"}, {"A1", "A1+3*A2"}, {"A2", "-A2"}, {"eps", "i*eps"}, {"T", "-i*T"}})});

  make("B3toD32", SystemId::B3, SystemId::D32,
       {{"x", "eps*T*X/(1+eps*T*X)"},
        {"y", "(1+eps*T*X)*(eps*T*X*Y+Y+A1*eps*T)/(eps*T)"},
        {"t", "eps*T"},
        {"a0", "-(1-2*A2*eps)/eps"},
        {"a1", "1/eps"},
        {"a2", "A1"},
        {"a3", "A0"}},
       1, "1/a1", {sub("S0", "s3", "s0", one), sub("S1", "s2", "s1", one), sub("S2", "s0 s1", "s2", one)});

  make("G2toA22", SystemId::G2, SystemId::A22,
       {{"a0", "1/(4*eps^6)"},
        {"a1", "A0"},
        {"a2", "(4*A1*eps^6-1)/(12*eps^6)"},
        {"t", "-(1-eps^4*T)/(sqrt2*eps^3)"},
        {"x", "sqrt2*eps^3*X/(2*eps^2+X)"},
        {"y", "(X+2*eps^2)*(X*Y+2*eps^2*Y+A0)/(2*sqrt2*eps^5)"}},
       6, "1/(4*a0)",
       {sub("S0", "s1", "s0", one, {{"A0", "-A0"}, {"A1", "A1+4*A0"}, {"eps", "eps*u"}}, "1+4*A0*eps^6",
            mpq_class(-1, 6)),
        sub("S1", "s0 s2", "s1", -i, {{"A0", "A0+A1"}, {"A1", "-A1"}, {"eps", "-i*eps"}})});

  make("B5toD52", SystemId::B5, SystemId::D52,
       {{"x", "eps*T*X/(1+eps*T*X)"},
        {"y", "(1+eps*T*X)*(eps*T*X*Y+Y+A1*eps*T)/(eps*T)"},
        {"z", "eps*T*Z/(1+eps*T*Z)"},
        {"w", "(1+eps*T*Z)*(eps*T*Z*W+W+A3*eps*T)/(eps*T)"},
        {"t", "eps*T"},
        {"a0", "-1/eps+2*A0"},
        {"a1", "1/eps"},
        {"a2", "A1"},
        {"a3", "A2"},
        {"a4", "A3"},
        {"a5", "A4"}},
       1, "1/a1",
       {sub("S0", "s0 s1", "s0", one), sub("S1", "s2", "s1", one), sub("S2", "s3", "s2", one),
        sub("S3", "s4", "s3", one), sub("S4", "s5", "s4", one)});
  return out;
}

std::vector<ProblemSpec> build_problems() {
  std::vector<ProblemSpec> out;
  {
    PhaseSpace s = problem_space("G2-4v", 5);
    ProblemSpec p{"G2-4v", s, {}, {}, {}, 5};
    p.generators = {
        gen(s, "s0", {{"a0", "-a0"}, {"a1", "a1+a0"}}),
        gen(s, "s1", {{"x", "x+a1/y"}, {"a0", "a0+a1"}, {"a1", "-a1"}, {"a2", "a2+a1"}}),
        gen(s, "s2", {{"y", "y-a2/(x-z)"}, {"w", "w+a2/(x-z)"}, {"a1", "a1+a2"}, {"a2", "-a2"}, {"a3", "a3+a2"}}),
        gen(s, "s3", {{"z", "z+a3/w"}, {"a2", "a2+a3"}, {"a3", "-a3"}, {"a4", "a4+a3"}}),
        gen(s, "s4",
            {{"x", "i*x"},
             {"y", "-i*y"},
             {"z", "i*z"},
             {"w", "-i*(w-3*a4/z+t/z^2+1/(2*z^3))"},
             {"t", "-i*t"},
             {"a3", "a3+3*a4"},
             {"a4", "-a4"}}),
    };
    p.charts = {
        chart(s, "r0", {{"x", "1/x"}, {"y", "-(y*x+a0+a1)*x"}}),
        chart(s, "r1", {{"x", "1/x"}, {"y", "-(y*x+a1)*x"}}),
        chart(s, "r2", {{"x", "-((x-z)*y-a2)*y"}, {"y", "1/y"}, {"w", "w+y"}}),
        chart(s, "r3", {{"z", "1/z"}, {"w", "-(w*z+a3)*z"}}),
        chart(s, "r4", {{"w", "w-3*a4/z+t/z^2+1/(2*z^3)"}}),
    };
    std::vector<std::string> rel = squares("s", 5);
    for (const char* r : {"(s0 s2)^2", "(s0 s3)^2", "(s0 s4)^2", "(s1 s3)^2", "(s1 s4)^2", "(s2 s4)^2", "(s0 s1)^3",
                          "(s1 s2)^3", "(s2 s3)^3", "(s3 s4)^6"})
      rel.emplace_back(r);
    p.presentation = {{"s0", "s1", "s2", "s3", "s4"}, relations_from(rel), "G2 extension", true};
    out.push_back(std::move(p));
  }
  {
    PhaseSpace s = problem_space("A22-4v", 4);
    ProblemSpec p{"A22-4v", s, {}, {}, {}, 6};
    p.generators = {
        gen(s, "s0", {{"x", "x+a0/y"}, {"a0", "-a0"}, {"a1", "a1+a0"}}),
        gen(s, "s1", {{"y", "y-a1/(x-z)"}, {"w", "w+a1/(x-z)"}, {"a0", "a0+a1"}, {"a1", "-a1"}, {"a2", "a2+a1"}}),
        gen(s, "s2", {{"z", "z+a2/w"}, {"a1", "a1+a2"}, {"a2", "-a2"}, {"a3", "a3+4*a2"}}),
        gen(s, "s3",
            {{"x", "-x"}, {"y", "-y"}, {"z", "-z"}, {"w", "-w+a3/z-t/z^2-2/z^4"}, {"a2", "a2+a3"}, {"a3", "-a3"}}),
    };
    p.charts = {
        chart(s, "r0", {{"x", "1/x"}, {"y", "-(y*x+a0)*x"}}),
        chart(s, "r1", {{"x", "-((x-z)*y-a1)*y"}, {"y", "1/y"}, {"w", "w+y"}}),
        chart(s, "r2", {{"z", "1/z"}, {"w", "-(w*z+a2)*z"}}),
        chart(s, "r3", {{"w", "w-a3/z+t/z^2+2/z^4"}}),
    };
    std::vector<std::string> rel = squares("s", 4);
    for (const char* r : {"(s0 s2)^2", "(s0 s3)^2", "(s1 s3)^2", "(s0 s1)^3", "(s1 s2)^3"}) rel.emplace_back(r);
    p.presentation = {{"s0", "s1", "s2", "s3"}, relations_from(rel), "A2^(2) extension", true};
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

const std::vector<BirationalMap>& generators(SystemId id) { return maps_for(id).gens; }

const BirationalMap& generator(SystemId id, std::string_view name) { return find_generator(generators(id), name); }

const std::vector<BirationalMap>& charts(SystemId id) { return maps_for(id).charts; }

std::optional<BirationalMap> phi_map(SystemId id) { return maps_for(id).phi; }

std::vector<DivisorLabel> divisor_labels(SystemId id) {
  if (id != SystemId::B3) return {};
  return {{"f0", parse_infix("x-1"), "x-1"}, {"f1", std::nullopt, "x-infinity"}, {"f2", parse_infix("y"), "y"}};
}

GroupPresentation presentation(SystemId id) {
  std::vector<std::string> names;
  for (const auto& g : generators(id)) names.push_back(g.name());
  std::vector<std::string> rel;
  switch (id) {
    case SystemId::B3:
      rel = squares("s", 4);
      for (const char* r : {"(s0 s1)^2", "(s0 s3)^2", "(s1 s3)^2", "(s0 s2)^3", "(s1 s2)^3", "(s2 s3)^4"})
        rel.emplace_back(r);
      return {names, relations_from(rel), dynkin_of(id), true};
    case SystemId::G2:
      rel = squares("s", 3);
      for (const char* r : {"(s0 s2)^2", "(s0 s1)^3", "(s1 s2)^6"}) rel.emplace_back(r);
      return {names, relations_from(rel), dynkin_of(id), true};
    case SystemId::D5: {
      rel = squares("S", 9);
      for (const char* r : {"(S0 S1)^2", "(S0 S3)^2", "(S0 S4)^2", "(S0 S5)^2", "(S1 S3)^2", "(S1 S4)^2", "(S1 S5)^2",
                            "(S2 S4)^2", "(S2 S5)^2", "(S4 S5)^2", "(S0 S2)^3", "(S1 S2)^3", "(S2 S3)^3", "(S3 S4)^3",
                            "(S3 S5)^3"})
        rel.emplace_back(r);
      for (auto& r : conjugations("S6", {1, 0, 2, 3, 4, 5})) rel.push_back(r);
      for (auto& r : conjugations("S7", {0, 1, 2, 3, 5, 4})) rel.push_back(r);
      for (auto& r : conjugations("S8", {1, 0, 2, 3, 5, 4})) rel.push_back(r);
      return {names, relations_from(rel), dynkin_of(id), true};
    }
    case SystemId::B4: {
      rel = squares("S", 7);
      for (const char* r : {"(S0 S1)^2", "(S0 S3)^2", "(S0 S4)^2", "(S1 S3)^2", "(S1 S4)^2", "(S2 S4)^2", "(S0 S2)^3",
                            "(S1 S2)^3", "(S2 S3)^3", "(S3 S4)^4"})
        rel.emplace_back(r);
      for (auto& r : conjugations("S5", {1, 0, 2, 3, 4})) rel.push_back(r);
      return {names, relations_from(rel), dynkin_of(id), true};
    }
    default:
      return derived_presentation(generators(id), dynkin_of(id));
  }
}

const std::vector<Coincidence>& coincidences() {
  static const std::vector<Coincidence> all = build_coincidences();
  return all;
}

const Coincidence& coincidence(std::string_view name) {
  for (const auto& c : coincidences())
    if (c.name == name) return c;
  throw UnknownName("no coincidence named " + std::string(name));
}

const std::vector<Degeneration>& degenerations() {
  static const std::vector<Degeneration> all = build_degenerations();
  return all;
}

const Degeneration& degeneration(std::string_view name) {
  for (const auto& d : degenerations())
    if (d.name == name) return d;
  throw UnknownName("no degeneration named " + std::string(name));
}

Bindings target_renaming(const Degeneration& d) {
  const HamiltonianSystem& sys = get_system(d.target);
  Bindings b;
  for (std::size_t k = 0; k < sys.phase_vars.size(); ++k) b.emplace(d.new_space.phase[k], RatExpr::var(sys.phase_vars[k]));
  b.emplace(d.new_space.time, RatExpr::var(sys.time_var));
  for (std::size_t k = 0; k < sys.params.size(); ++k) b.emplace(d.new_space.params[k], RatExpr::var(sys.params[k]));
  return b;
}

const std::vector<ProblemSpec>& problems() {
  static const std::vector<ProblemSpec> all = build_problems();
  return all;
}

const ProblemSpec& problem(std::string_view name) {
  for (const auto& p : problems())
    if (p.name == name) return p;
  throw UnknownName("no problem named " + std::string(name));
}

}  // namespace painleve
