#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace softarm {

// Damped stretch/bend rod: axial springs between nodes, angle springs at
// interior nodes, per-node viscous damping. Node 0 is position-clamped by
// default (cantilever). Twist/shear are carried in the director frames but
// inert under these forces.
struct RodParams {
    double length = 1.0;                 // m
    double radius = 0.025;               // m
    double density = 1000.0;             // kg/m^3
    double youngs_modulus = 1.0e7;       // Pa
    double shear_modulus = 1.0e7 / 3.0;  // Pa
    double damping_coefficient = 10.0;   // 1/s
    int n_elements = 12;
    int n_substeps = 100;                // physics substeps per control step
    Eigen::Vector3d gravity = Eigen::Vector3d::Zero();  // m/s^2
    bool clamp_base = true;

    double cross_section_area() const;
    double second_moment_of_area() const;
    double element_rest_length() const { return length / n_elements; }
    double total_mass() const;
    void validate() const;  // throws std::invalid_argument
};

struct RodState {
    Eigen::Matrix3Xd node_positions;                 // 3 x (n_elements+1)
    Eigen::Matrix3Xd node_velocities;                // 3 x (n_elements+1)
    std::vector<Eigen::Matrix3d> element_directors;  // columns d1,d2,d3; d3 = tangent
    Eigen::VectorXd element_rest_lengths;
    double sim_time = 0.0;

    int n_nodes() const { return static_cast<int>(node_positions.cols()); }
    int n_elements() const { return n_nodes() - 1; }
};

// Point forces on rod nodes. Node 0 (clamped base) is never a valid target.
struct ExternalLoadSet {
    std::vector<int> node_indices;  // strictly increasing, in [1, n_elements]
    Eigen::Matrix3Xd forces;        // 3 x node_indices.size(), Newtons

    static ExternalLoadSet none() { return {{}, Eigen::Matrix3Xd(3, 0)}; }
    void validate(int n_nodes) const;  // throws std::invalid_argument
};

// Numerical blow-up (non-finite state), carrying where it happened.
class SimulationError : public std::runtime_error {
  public:
    SimulationError(const std::string& message, int substep_index, double sim_time);
    int substep_index;
    double sim_time;
};

RodState init_straight_rod(const RodParams& params, const Eigen::Vector3d& base,
                           const Eigen::Vector3d& direction);

// Section-end forcing nodes: k * (n_elements / n_sections) for k = 1..n_sections.
// Throws unless n_sections ∈ {2,3,4,6,8,12} and n_sections divides n_elements.
std::vector<int> forcing_nodes(int n_sections, int n_elements);

// Advance one control interval with loads held constant; semi-implicit Euler.
void step_physics(RodState& state, const RodParams& params, const ExternalLoadSet& loads,
                  double control_dt, int n_substeps);

Eigen::Vector3d tip_position(const RodState& state);

// Lumped masses: half an element's mass to each of its end nodes.
Eigen::VectorXd node_masses(const RodParams& params);

// Net axial + bending force per node; exact gradient of the elastic energy.
Eigen::Matrix3Xd elastic_forces(const RodState& state, const RodParams& params);

double kinetic_energy(const RodState& state, const RodParams& params);
double axial_strain_energy(const RodState& state, const RodParams& params);
double bending_energy(const RodState& state, const RodParams& params);
double mechanical_energy(const RodState& state, const RodParams& params);

}  // namespace softarm
