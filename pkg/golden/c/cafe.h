// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

#ifndef KNOW_CAFE_H
#define KNOW_CAFE_H

#include <stdbool.h>
#include <stddef.h>

/* Cafe */
#define KNOW_CAFE_TYPE_IRI "https://know.dev/Cafe"

typedef struct Cafe {
    const char *id;
} Cafe;

#endif /* KNOW_CAFE_H */
