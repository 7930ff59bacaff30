// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

#ifndef KNOW_ORGANIZATION_H
#define KNOW_ORGANIZATION_H

#include <stdbool.h>
#include <stddef.h>

/* Organization */
#define KNOW_ORGANIZATION_TYPE_IRI "https://know.dev/Organization"

typedef struct Organization {
    const char *id;
} Organization;

#endif /* KNOW_ORGANIZATION_H */
