#include <pybind11/pybind11.h>

namespace py = pybind11;

PYBIND11_MODULE(playbench, m) {
    m.doc() = "GUI code evaluation harness core";
}
