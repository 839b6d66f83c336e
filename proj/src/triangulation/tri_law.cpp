namespace peelkit {} // TODO-stub
