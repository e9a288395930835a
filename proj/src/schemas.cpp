#include "hyperbc/schemas.hpp"

#include <map>

#include "hyperbc/types.hpp"

namespace hyperbc {

namespace {

const char* const k_config = R"schema({
  "type": "object",
  "additionalProperties": false,
  "required": ["plant", "controller_target"],
  "properties": {
    "plant": {
      "type": "object",
      "additionalProperties": false,
      "required": ["alpha", "beta", "gamma"],
      "properties": {
        "alpha": {"type": "number", "exclusiveMinimum": 0},
        "beta": {"type": "number", "exclusiveMinimum": 0},
        "gamma": {"type": "number"}
      }
    },
    "controller_target": {
      "type": "object",
      "additionalProperties": false,
      "required": ["kappa", "mu"],
      "properties": {
        "kappa": {"type": "array", "minItems": 2, "maxItems": 2, "items": {"type": "number"}},
        "mu": {
          "oneOf": [
            {"type": "number"},
            {
              "type": "object",
              "additionalProperties": false,
              "required": ["rate"],
              "properties": {"rate": {"type": "number"}}
            }
          ]
        }
      }
    },
    "observer_target": {
      "type": "object",
      "additionalProperties": false,
      "required": ["kappa", "mu"],
      "properties": {
        "kappa": {"type": "array", "minItems": 2, "maxItems": 2, "items": {"type": "number"}},
        "mu": {
          "oneOf": [
            {"type": "number"},
            {
              "type": "object",
              "additionalProperties": false,
              "required": ["rate"],
              "properties": {"rate": {"type": "number"}}
            }
          ]
        }
      }
    },
    "approximation": {
      "type": "object",
      "additionalProperties": false,
      "properties": {
        "n": {"type": "integer", "minimum": 0},
        "basis": {"type": "string", "enum": ["OpenLoop", "Intermediate", "Desired"]}
      }
    },
    "epsilon": {"type": "number", "exclusiveMinimum": 0, "maximum": 1},
    "window": {
      "type": "object",
      "additionalProperties": false,
      "properties": {
        "re_min": {"type": "number"},
        "im_max": {"type": "number", "exclusiveMinimum": 0}
      }
    },
    "simulation": {
      "type": "object",
      "additionalProperties": false,
      "properties": {
        "cells": {"type": "integer", "minimum": 2},
        "T": {"type": "number", "minimum": 0},
        "x0": {"type": "string", "enum": ["default", "zero"]}
      }
    },
    "quadrature": {
      "type": "object",
      "additionalProperties": false,
      "properties": {"nodes": {"type": "integer", "minimum": 4}}
    },
    "sampling": {
      "type": "object",
      "additionalProperties": false,
      "properties": {
        "per_disk": {"type": "integer", "minimum": 8},
        "grid": {"type": "integer", "minimum": 2}
      }
    }
  }
}
)schema";

const char* const k_spectrum_report = R"schema({
  "type": "object",
  "additionalProperties": false,
  "required": ["spectra", "provenance"],
  "properties": {
    "spectra": {
      "type": "array",
      "items": {
        "type": "object",
        "additionalProperties": false,
        "required": ["set", "count", "eigenvalues"],
        "properties": {
          "set": {
            "type": "string",
            "enum": ["OpenLoop", "Intermediate", "Desired", "ClosedLoop", "ObserverIntermediate", "ObserverDesired", "ObserverClosedLoop"]
          },
          "count": {"type": "integer", "minimum": 0},
          "eigenvalues": {
            "type": "array",
            "items": {
              "type": "object",
              "additionalProperties": false,
              "required": ["re", "im"],
              "properties": {"re": {"type": "number"}, "im": {"type": "number"}}
            }
          }
        }
      }
    },
    "provenance": {
      "type": "object",
      "additionalProperties": false,
      "required": ["window", "quadrature_nodes", "sampling", "n", "basis", "epsilon"],
      "properties": {
        "window": {
          "type": "object",
          "additionalProperties": false,
          "required": ["re_min", "im_max"],
          "properties": {"re_min": {"type": "number"}, "im_max": {"type": "number"}}
        },
        "quadrature_nodes": {"type": "integer"},
        "sampling": {
          "type": "object",
          "additionalProperties": false,
          "required": ["per_disk", "grid"],
          "properties": {"per_disk": {"type": "integer"}, "grid": {"type": "integer"}}
        },
        "n": {"type": "integer"},
        "basis": {"type": "string", "enum": ["OpenLoop", "Intermediate", "Desired"]},
        "epsilon": {"type": "number"}
      }
    }
  }
}
)schema";

const char* const k_design_report = R"schema({
  "type": "object",
  "additionalProperties": false,
  "required": ["controller", "provenance"],
  "properties": {
    "controller": {
      "type": "object",
      "additionalProperties": false,
      "required": ["rho", "c_plus", "c_minus", "gains", "assumptions", "convergence"],
      "properties": {
        "rho": {
          "type": "object",
          "additionalProperties": false,
          "required": ["re", "im"],
          "properties": {"re": {"type": "number"}, "im": {"type": "number"}}
        },
        "c_plus": {
          "type": "object",
          "additionalProperties": false,
          "required": ["re", "im"],
          "properties": {"re": {"type": "number"}, "im": {"type": "number"}}
        },
        "c_minus": {
          "type": "object",
          "additionalProperties": false,
          "required": ["re", "im"],
          "properties": {"re": {"type": "number"}, "im": {"type": "number"}}
        },
        "gains": {
          "type": "array",
          "items": {
            "type": "object",
            "additionalProperties": false,
            "required": ["re", "im"],
            "properties": {"re": {"type": "number"}, "im": {"type": "number"}}
          }
        },
        "assumptions": {
          "type": "object",
          "additionalProperties": false,
          "required": ["riesz_ok", "discrete_ok", "simple_ok", "a2_ok", "a2_bound_M", "a2_samples_max", "min_gap", "details"],
          "properties": {
            "riesz_ok": {"type": "boolean"},
            "discrete_ok": {"type": "boolean"},
            "simple_ok": {"type": "boolean"},
            "a2_ok": {"type": "boolean"},
            "a2_bound_M": {"type": "number"},
            "a2_samples_max": {"type": "number"},
            "min_gap": {"type": "number"},
            "details": {"type": "string"}
          }
        },
        "convergence": {
          "type": "object",
          "additionalProperties": false,
          "required": ["n", "contained", "one_per_disk", "unmatched_count", "max_re", "hausdorff"],
          "properties": {
            "n": {"type": "integer"},
            "contained": {"type": "boolean"},
            "one_per_disk": {"type": "boolean"},
            "unmatched_count": {"type": "integer"},
            "max_re": {"type": ["number", "null"]},
            "hausdorff": {"type": ["number", "null"]}
          }
        }
      }
    },
    "observer": {
      "type": "object",
      "additionalProperties": false,
      "required": ["rho_o", "r", "l", "assumptions", "convergence"],
      "properties": {
        "rho_o": {
          "type": "object",
          "additionalProperties": false,
          "required": ["re", "im"],
          "properties": {"re": {"type": "number"}, "im": {"type": "number"}}
        },
        "r": {
          "type": "array",
          "items": {
            "type": "object",
            "additionalProperties": false,
            "required": ["re", "im"],
            "properties": {"re": {"type": "number"}, "im": {"type": "number"}}
          }
        },
        "l": {
          "type": "array",
          "items": {
            "type": "object",
            "additionalProperties": false,
            "required": ["re", "im"],
            "properties": {"re": {"type": "number"}, "im": {"type": "number"}}
          }
        },
        "assumptions": {
          "type": "object",
          "additionalProperties": false,
          "required": ["riesz_ok", "discrete_ok", "simple_ok", "a2_ok", "a2_bound_M", "a2_samples_max", "min_gap", "details"],
          "properties": {
            "riesz_ok": {"type": "boolean"},
            "discrete_ok": {"type": "boolean"},
            "simple_ok": {"type": "boolean"},
            "a2_ok": {"type": "boolean"},
            "a2_bound_M": {"type": "number"},
            "a2_samples_max": {"type": "number"},
            "min_gap": {"type": "number"},
            "details": {"type": "string"}
          }
        },
        "convergence": {
          "type": "object",
          "additionalProperties": false,
          "required": ["n", "contained", "one_per_disk", "unmatched_count", "max_re", "hausdorff"],
          "properties": {
            "n": {"type": "integer"},
            "contained": {"type": "boolean"},
            "one_per_disk": {"type": "boolean"},
            "unmatched_count": {"type": "integer"},
            "max_re": {"type": ["number", "null"]},
            "hausdorff": {"type": ["number", "null"]}
          }
        }
      }
    },
    "provenance": {
      "type": "object",
      "additionalProperties": false,
      "required": ["window", "quadrature_nodes", "sampling", "n", "basis", "epsilon"],
      "properties": {
        "window": {
          "type": "object",
          "additionalProperties": false,
          "required": ["re_min", "im_max"],
          "properties": {"re_min": {"type": "number"}, "im_max": {"type": "number"}}
        },
        "quadrature_nodes": {"type": "integer"},
        "sampling": {
          "type": "object",
          "additionalProperties": false,
          "required": ["per_disk", "grid"],
          "properties": {"per_disk": {"type": "integer"}, "grid": {"type": "integer"}}
        },
        "n": {"type": "integer"},
        "basis": {"type": "string", "enum": ["OpenLoop", "Intermediate", "Desired"]},
        "epsilon": {"type": "number"}
      }
    }
  }
}
)schema";

const char* const k_converge_report = R"schema({
  "type": "object",
  "additionalProperties": false,
  "required": ["criterion", "range", "rows", "minimal_order", "provenance"],
  "properties": {
    "criterion": {
      "type": "object",
      "additionalProperties": false,
      "required": ["kind", "margin"],
      "properties": {
        "kind": {"type": "string", "enum": ["TheoremDisks", "StabilityMargin"]},
        "margin": {"type": ["number", "null"]}
      }
    },
    "range": {
      "type": "object",
      "additionalProperties": false,
      "required": ["n_min", "n_max"],
      "properties": {"n_min": {"type": "integer"}, "n_max": {"type": "integer"}}
    },
    "rows": {
      "type": "array",
      "items": {
        "type": "object",
        "additionalProperties": false,
        "required": ["n", "contained", "one_per_disk", "unmatched_count", "max_re", "hausdorff"],
        "properties": {
          "n": {"type": "integer"},
          "contained": {"type": "boolean"},
          "one_per_disk": {"type": "boolean"},
          "unmatched_count": {"type": "integer"},
          "max_re": {"type": ["number", "null"]},
          "hausdorff": {"type": ["number", "null"]}
        }
      }
    },
    "minimal_order": {
      "type": "object",
      "additionalProperties": false,
      "required": ["n_eps", "first_pass"],
      "properties": {
        "n_eps": {"type": ["integer", "null"]},
        "first_pass": {"type": ["integer", "null"]}
      }
    },
    "provenance": {
      "type": "object",
      "additionalProperties": false,
      "required": ["window", "quadrature_nodes", "sampling", "n", "basis", "epsilon"],
      "properties": {
        "window": {
          "type": "object",
          "additionalProperties": false,
          "required": ["re_min", "im_max"],
          "properties": {"re_min": {"type": "number"}, "im_max": {"type": "number"}}
        },
        "quadrature_nodes": {"type": "integer"},
        "sampling": {
          "type": "object",
          "additionalProperties": false,
          "required": ["per_disk", "grid"],
          "properties": {"per_disk": {"type": "integer"}, "grid": {"type": "integer"}}
        },
        "n": {"type": "integer"},
        "basis": {"type": "string", "enum": ["OpenLoop", "Intermediate", "Desired"]},
        "epsilon": {"type": "number"}
      }
    }
  }
}
)schema";

const char* const k_simulate_report = R"schema({
  "type": "object",
  "additionalProperties": false,
  "required": ["fitted_rate", "spectral_rate", "relative_gap", "provenance"],
  "properties": {
    "fitted_rate": {"type": ["number", "null"]},
    "spectral_rate": {"type": ["number", "null"]},
    "relative_gap": {"type": ["number", "null"]},
    "provenance": {
      "type": "object",
      "additionalProperties": false,
      "required": ["window", "quadrature_nodes", "sampling", "n", "basis", "epsilon"],
      "properties": {
        "window": {
          "type": "object",
          "additionalProperties": false,
          "required": ["re_min", "im_max"],
          "properties": {"re_min": {"type": "number"}, "im_max": {"type": "number"}}
        },
        "quadrature_nodes": {"type": "integer"},
        "sampling": {
          "type": "object",
          "additionalProperties": false,
          "required": ["per_disk", "grid"],
          "properties": {"per_disk": {"type": "integer"}, "grid": {"type": "integer"}}
        },
        "n": {"type": "integer"},
        "basis": {"type": "string", "enum": ["OpenLoop", "Intermediate", "Desired"]},
        "epsilon": {"type": "number"}
      }
    }
  }
}
)schema";

const char* const k_observe_report = R"schema({
  "type": "object",
  "additionalProperties": false,
  "required": ["fitted_error_rate", "spectral_rate", "relative_gap", "provenance"],
  "properties": {
    "fitted_error_rate": {"type": ["number", "null"]},
    "spectral_rate": {"type": ["number", "null"]},
    "relative_gap": {"type": ["number", "null"]},
    "provenance": {
      "type": "object",
      "additionalProperties": false,
      "required": ["window", "quadrature_nodes", "sampling", "n", "basis", "epsilon"],
      "properties": {
        "window": {
          "type": "object",
          "additionalProperties": false,
          "required": ["re_min", "im_max"],
          "properties": {"re_min": {"type": "number"}, "im_max": {"type": "number"}}
        },
        "quadrature_nodes": {"type": "integer"},
        "sampling": {
          "type": "object",
          "additionalProperties": false,
          "required": ["per_disk", "grid"],
          "properties": {"per_disk": {"type": "integer"}, "grid": {"type": "integer"}}
        },
        "n": {"type": "integer"},
        "basis": {"type": "string", "enum": ["OpenLoop", "Intermediate", "Desired"]},
        "epsilon": {"type": "number"}
      }
    }
  }
}
)schema";

}  // namespace

const std::string& schema_text(const std::string& name) {
    static const std::map<std::string, std::string> texts{
        {"config", k_config},
        {"spectrum_report", k_spectrum_report},
        {"design_report", k_design_report},
        {"converge_report", k_converge_report},
        {"simulate_report", k_simulate_report},
        {"observe_report", k_observe_report},
    };
    auto it = texts.find(name);
    if (it == texts.end()) throw ContractViolation("unknown schema '" + name + "'");
    return it->second;
}

nlohmann::json schema_json(const std::string& name) {
    return nlohmann::json::parse(schema_text(name));
}

}  // namespace hyperbc
